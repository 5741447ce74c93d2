"""Small shared helpers."""

import time


class DeadlineExceeded(RuntimeError):
    """Raised by cooperative timeout checks inside the solvers."""


class Deadline:
    """Wall-clock budget; algorithms poll `check` in their main loops."""

    def __init__(self, seconds=None):
        self.limit = None if seconds is None else time.monotonic() + seconds

    def check(self):
        if self.limit is not None and time.monotonic() > self.limit:
            raise DeadlineExceeded()

    def expired(self):
        return self.limit is not None and time.monotonic() > self.limit
