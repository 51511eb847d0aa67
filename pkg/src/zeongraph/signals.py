from __future__ import annotations

from blinker import Namespace

# This namespace is only for signals provided by zeongraph itself.
_signals = Namespace()

count_started = _signals.signal("count-started")
count_finished = _signals.signal("count-finished")
verification_failed = _signals.signal("verification-failed")
