"""Utility to get the path of qhtoeplitz data files"""
# Standard Library
import os
import sys

PACKAGE_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))


def get():
    """Return the path for the packaged data."""
    checkout_path = os.path.join(PACKAGE_ROOT, "share/qhtoeplitz")
    launch_path = os.path.realpath(sys.path[0])
    if os.path.isdir(checkout_path):
        data_path = checkout_path
    elif os.path.isdir(os.path.join(sys.prefix, "share/qhtoeplitz")):
        data_path = os.path.join(sys.prefix, "share/qhtoeplitz")
    elif launch_path.startswith("/usr/local"):
        data_path = "/usr/local/share/qhtoeplitz"
    elif launch_path.startswith("/usr"):
        data_path = "/usr/share/qhtoeplitz"
    else:
        data_path = os.path.normpath(os.path.join(launch_path, "../share/qhtoeplitz"))
    if not os.path.exists(data_path):
        raise IOError("data_path can't be found at : %s" % data_path)
    return data_path


def get_file(filename):
    """Return the full path of a packaged data file"""
    return os.path.join(get(), filename)
