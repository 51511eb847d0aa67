"""Module level JSON helpers. They encode the same extra types as
:class:`~zeongraph.json.provider.DefaultJSONProvider` but ignore any
enumerator's provider, use :attr:`enumerator.json
<zeongraph.Enumerator.json>` for that.
"""

from __future__ import annotations

import json as _json
import typing as t

from .provider import _default


def dumps(obj: t.Any, **kwargs: t.Any) -> str:
    return _json.dumps(obj, **{"default": _default, **kwargs})


def dump(obj: t.Any, fp: t.IO[str], **kwargs: t.Any) -> None:
    _json.dump(obj, fp, **{"default": _default, **kwargs})


def loads(s: str | bytes, **kwargs: t.Any) -> t.Any:
    return _json.loads(s, **kwargs)


def load(fp: t.IO[t.AnyStr], **kwargs: t.Any) -> t.Any:
    return _json.load(fp, **kwargs)
