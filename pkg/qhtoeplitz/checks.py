"""Pass/fail values returned by the verification helpers"""


class CheckResult:

    """Outcome of a single check.

    A failing check is a value, not an exception: suites collect many of them
    and report the failures together.
    """

    def __init__(self, name, passed, details=None):
        self.name = name
        self.passed = bool(passed)
        self.details = details or {}

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return "CheckResult(%s, %s)" % (self.name, "pass" if self.passed else "fail")

    @classmethod
    def skipped(cls, name, reason):
        return cls(name, True, {"skipped": reason})

    @property
    def is_skipped(self):
        return "skipped" in self.details

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "details": self.details}


def relative_error(found, expected):
    """|found - expected| relative to max(1, |expected|)"""
    return abs(found - expected) / max(1.0, abs(expected))
