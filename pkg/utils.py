import argparse
import json
import sys
from typing import Any, Dict, Optional, Tuple


def check_integer_format(text: str) -> bool:

    """
    Check that the text is an integer, optionally signed
    :param text: One token of a command-line flag
    :return:
    """

    stripped = text.strip()
    if stripped.startswith(("-", "+")):
        stripped = stripped[1:]

    if stripped != "" and all(x in "0123456789" for x in stripped):
        try:
            int(text)
            return True
        except ValueError:
            return False

    else:
        return False


def parse_int_list(text: str) -> Tuple[int, ...]:

    """
    argparse type for comma-separated integers such as "3,1" or "-1,-3"
    :param text: Raw flag value
    :return: The integers in the given order
    """

    tokens = [token for token in text.split(",") if token.strip() != ""]
    if not tokens:
        raise argparse.ArgumentTypeError("expected a comma-separated list of integers")

    bad = [token for token in tokens if not check_integer_format(token)]
    if bad:
        raise argparse.ArgumentTypeError(f"not an integer: {', '.join(bad)}")

    return tuple(int(token) for token in tokens)


def read_document(path: Optional[str]) -> Dict[str, Any]:

    """
    Load one JSON document from a file, or from standard input when no path is given
    :param path: File path or None
    :return: The decoded document
    :raises ValueError: when the text is not JSON
    """

    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()

    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"input is not valid JSON: {e}") from e
