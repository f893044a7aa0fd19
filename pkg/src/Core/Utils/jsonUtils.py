import json
from typing import Any, Dict, List


class CustomJSONEncoder(json.JSONEncoder):
    """
    JSON encoder of the reports.
        Description:
            Nested dictionaries are written with sorted keys, one entry per line. Lists of scalars stay on one line,
            lists of strings or containers get one element per line.
    """

    indentation_level: int

    def __init__(self, *args: List[Any], **kwargs: Dict[str, Any]):
        """
        Custom JSON encoder with readable indentation and canonical key order.

        :param args:
        :param kwargs:
        """

        if kwargs.get('indent') is None:
            kwargs['indent'] = 2
        super().__init__(*args, **kwargs)
        self.indentation_level = 0

    @property
    def indent_str(self) -> str:
        """Generate an indentation string"""
        return " " * self.indentation_level * self.indent

    def iterencode(self, o: Any, _one_shot: bool = False) -> str:
        """
        Encode JSON object *o* in a file. Called with json.dump().

        :param o: Serializable object.
        :return: Return the object "o" encoded with JSON style
        """

        return self.encode(o)

    def encode(self, o: Any) -> str:
        """
        Encode JSON object *o*. Called with json.dumps().

        :param o: Serializable object.
        :return: Return the object "o" encoded with JSON style
        """

        # Inline lists of scalars, one line per element otherwise
        if isinstance(o, (list, tuple)):
            if len(o) == 0:
                return "[]"
            if not any(isinstance(elt, (list, tuple, dict, str)) for elt in o):
                return f"[{', '.join(self.encode(elt) for elt in o)}]"
            self.indentation_level += 1
            output = [f"{self.indent_str}{self.encode(elt)}" for elt in o]
            self.indentation_level -= 1
            return '[\n' + ',\n'.join(output) + f'\n{self.indent_str}]'

        # Dictionaries with sorted keys
        elif isinstance(o, dict):
            if len(o) == 0:
                return "{}"
            self.indentation_level += 1
            output = [f"{self.indent_str}{json.dumps(str(key))}: {self.encode(o[key])}"
                      for key in sorted(o, key=str)]
            self.indentation_level -= 1
            return '{\n' + ',\n'.join(output) + f'\n{self.indent_str}}}'

        # Numpy scalars
        elif hasattr(o, 'item'):
            return json.dumps(o.item())

        else:
            return json.dumps(o)


def dump_report(content: Dict[str, Any], path: str) -> None:
    """Write a report, byte-identical for identical contents."""
    with open(path, 'w') as file:
        file.write(json.dumps(content, cls=CustomJSONEncoder))
        file.write('\n')


def load_report(path: str) -> Dict[str, Any]:
    with open(path) as file:
        return json.load(file)
