import re

from src.sfs.models import FormParseError, SeifertForm

_FIBRE = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")
_FORM = re.compile(r"^\s*(?:\(\s*[+-]?\d+\s*,\s*[+-]?\d+\s*\)\s*)+$")


def parse_form(text: str, min_fibres: int = 3, max_fibres: int = 4) -> SeifertForm:
    """Parse `(p1,x1)(p2,x2)(p3,x3)`; whitespace is allowed anywhere between tokens."""
    if not _FORM.match(text):
        raise FormParseError(f"cannot parse form {text!r}; expected (p,x)(p,x)(p,x)")
    fibres = tuple((int(p), int(x)) for p, x in _FIBRE.findall(text))
    if not min_fibres <= len(fibres) <= max_fibres:
        raise FormParseError(
            f"form {text!r} has {len(fibres)} fibres; expected {min_fibres} to {max_fibres}"
        )
    return SeifertForm(fibres=fibres)


def format_form(form: SeifertForm) -> str:
    return str(form)
