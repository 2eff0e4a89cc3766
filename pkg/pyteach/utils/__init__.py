# flake8: noqa
from .bits import iter_bits, mask_of, popcount
from .json import to_json, dumps, check_string
