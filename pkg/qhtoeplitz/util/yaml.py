"""Utility functions for YAML handling"""
# Standard Library
import os

# Third Party Libraries
# pylint: disable=no-member
import yaml

# qhtoeplitz Modules
from qhtoeplitz.util.log import logger


def read_yaml_from_file(filename):
    """Read filename and return parsed yaml"""
    if not filename or not os.path.exists(filename):
        return {}

    with open(filename, "r") as yaml_file:
        try:
            yaml_content = yaml.safe_load(yaml_file) or {}
        except (yaml.scanner.ScannerError, yaml.parser.ParserError):
            logger.error("error parsing file %s", filename)
            yaml_content = {}

    return yaml_content


def dump_yaml(data):
    """Serialize a report with block style and stable key order"""
    return yaml.safe_dump(data, default_flow_style=False, sort_keys=False)
