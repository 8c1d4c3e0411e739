"""Fan grid cells out over a pool of worker threads"""
# Standard Library
from concurrent.futures import ThreadPoolExecutor

# qhtoeplitz Modules
from qhtoeplitz.util.log import logger


class TaskFailure:

    """Result placeholder for a task that raised"""

    def __init__(self, item, error):
        self.item = item
        self.error = error

    def __repr__(self):
        return "TaskFailure(%r, %s)" % (self.item, self.error)


def _run_task(func, item):
    try:
        return func(item)
    except Exception as ex:  # pylint: disable=broad-except
        logger.error("Error while completing task %s on %s: %s", func.__name__, item, ex)
        return TaskFailure(item, ex)


def run_parallel(func, items, workers=1):
    """Apply `func` to every item and return the results in input order.

    Exceptions are logged and returned as `TaskFailure` values so a single
    failing cell does not abort a sweep.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [_run_task(func, item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda item: _run_task(func, item), items))
