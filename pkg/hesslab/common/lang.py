# -*- coding: utf-8 -*-
"""Small helpers for argument validation."""
from typing import Any, Tuple, Type, Union

__all__ = ('type_check',)


def type_check(what: Any, of_type: Union[Type, Tuple[Type, ...]], msg: str = None, allow_none: bool = False):  # pylint: disable=unsubscriptable-object
    """Verify that an object is an instance of the given type or types.

    :param what: the object to check.
    :param of_type: the type or tuple of types that ``what`` should be an instance of.
    :param msg: optional message to use instead of the default one.
    :param allow_none: if ``True``, ``None`` is accepted as well.
    :return: the object itself, so the check can be used inline.
    :raises TypeError: if ``what`` is not an instance of ``of_type``.
    """
    if allow_none and what is None:
        return what

    if not isinstance(what, of_type):
        if msg is None:
            msg = f'got an object of type `{type(what).__name__}`, expecting `{of_type}`.'
        raise TypeError(msg)

    return what
