"""
Command line interface. Every command writes a JSON report to stdout.
"""
# flake8: noqa
from .main import cli
