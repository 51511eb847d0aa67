from __future__ import annotations

import dataclasses
import json
import typing as t
import weakref
from fractions import Fraction

from ..algebra import MultiIndex

if t.TYPE_CHECKING:  # pragma: no cover
    from ..app import Enumerator


class JSONProvider:
    """JSON encoding and decoding for one enumerator. Subclasses must
    implement :meth:`dumps` and :meth:`loads`, the other methods build
    on them.

    Replace the provider by setting
    :attr:`~zeongraph.Enumerator.json_provider_class` on an
    ``Enumerator`` subclass, or by assigning an instance to
    :attr:`enumerator.json <zeongraph.Enumerator.json>`.

    :param enumerator: Kept as a :class:`weakref.proxy` in
        :attr:`_enumerator`.
    """

    def __init__(self, enumerator: Enumerator) -> None:
        self._enumerator: Enumerator = weakref.proxy(enumerator)

    def dumps(self, obj: t.Any, **kwargs: t.Any) -> str:
        raise NotImplementedError

    def loads(self, s: str | bytes, **kwargs: t.Any) -> t.Any:
        """Decode text or UTF-8 bytes."""
        raise NotImplementedError

    def dump(self, obj: t.Any, fp: t.IO[str], **kwargs: t.Any) -> None:
        fp.write(self.dumps(obj, **kwargs))

    def load(self, fp: t.IO[t.AnyStr], **kwargs: t.Any) -> t.Any:
        return self.loads(fp.read(), **kwargs)

    def report(self, obj: t.Any) -> str:
        """The text written to standard output for ``obj``, ending in a
        newline.
        """
        return f"{self.dumps(obj)}\n"


def _default(o: t.Any) -> t.Any:
    if isinstance(o, (Fraction, MultiIndex)):
        return str(o)

    if hasattr(o, "to_report"):
        return o.to_report()

    if dataclasses.is_dataclass(o) and not isinstance(o, type):
        return dataclasses.asdict(o)

    raise TypeError(f"Object of type {type(o).__name__} is not JSON serializable")


class DefaultJSONProvider(JSONProvider):
    """A provider on the standard :mod:`json` module that also encodes

    -   :class:`fractions.Fraction` as ``"3/16"``,
    -   :class:`~zeongraph.algebra.MultiIndex` as ``"{0,2}"``,
    -   objects with a ``to_report`` method as its result, so counts
        appear as decimal strings of any length,
    -   other dataclass instances through :func:`dataclasses.asdict`.
    """

    #: Called for objects :mod:`json` cannot encode. Returns something
    #: it can, or raises ``TypeError``.
    default: t.Callable[[t.Any], t.Any] = staticmethod(_default)  # type: ignore[assignment]

    ensure_ascii = True

    #: Sorted keys make repeated runs byte-identical apart from timings.
    sort_keys = True

    #: Layout of :meth:`report`. ``None`` defers to the ``JSON_COMPACT``
    #: config value, and if that is ``None`` too, reports are compact
    #: unless the enumerator is in debug mode.
    compact: bool | None = None

    def dumps(self, obj: t.Any, **kwargs: t.Any) -> str:
        """Encode with :func:`json.dumps`. :attr:`default`,
        :attr:`ensure_ascii` and :attr:`sort_keys` fill in the arguments
        not given.
        """
        options = {
            "default": self.default,
            "ensure_ascii": self.ensure_ascii,
            "sort_keys": self.sort_keys,
        }
        options.update(kwargs)
        return json.dumps(obj, **options)

    def loads(self, s: str | bytes, **kwargs: t.Any) -> t.Any:
        return json.loads(s, **kwargs)

    def _is_compact(self) -> bool:
        for setting in (self.compact, self._enumerator.config.get("JSON_COMPACT")):
            if setting is not None:
                return bool(setting)

        return not self._enumerator.debug

    def report(self, obj: t.Any) -> str:
        """One line of JSON without spaces, or indented by two when not
        compact, see :attr:`compact`.
        """
        if self._is_compact():
            text = self.dumps(obj, separators=(",", ":"))
        else:
            text = self.dumps(obj, indent=2)

        return f"{text}\n"
