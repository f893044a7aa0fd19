from typing import Any, Iterable, Tuple, Type, Union
from collections import namedtuple


def make_config(configuration_object: Any,
                configuration_name: str,
                **kwargs) -> namedtuple:
    """
    Freeze the parameters of a configuration object into a namedtuple. When the object already holds a namedtuple
    under the same name, its fields that are not given again are carried over.

    :param configuration_object: Instance of any Config class.
    :param configuration_name: Name of the variable containing the namedtuple.
    :param kwargs: Parameters of the namedtuple.
    :return: Namedtuple of the parameters.
    """

    items = dict(kwargs)
    previous = configuration_object.__dict__.get(configuration_name)
    if previous is not None:
        for key, value in previous._asdict().items():
            items.setdefault(key, value)
    return namedtuple(configuration_name, tuple(items))(**items)


def check_type(owner: str, key: str, value: Any, required: Union[Type, Tuple[Type, ...]]) -> Any:
    """
    Exact type check of a configuration parameter; bool values are refused where an int is required.

    :param owner: Name of the checking class, used in the message.
    :param key: Name of the parameter.
    :param value: Given value.
    :param required: Required type or tuple of accepted types.
    :return: The value.
    """

    accepted = required if isinstance(required, tuple) else (required,)
    if type(value) not in accepted:
        names = ' or '.join(t.__name__ for t in accepted)
        raise TypeError(f"[{owner}] Wrong '{key}' type: {names} required, get {type(value)}")
    return value


def check_positive(owner: str, items: Iterable[Tuple[str, int]], strict: bool = True) -> None:
    """
    Value check of integer parameters, given as (name, value) pairs.
    """

    for key, value in items:
        if value < 1 if strict else value < 0:
            kind = 'positive' if strict else 'non-negative'
            raise ValueError(f"[{owner}] Wrong '{key}' value: {kind} int required, get {value}")
