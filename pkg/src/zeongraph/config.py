from __future__ import annotations

import errno
import importlib
import json
import os
import tomllib
import typing as t

from .lattice import LatticeOptions

if t.TYPE_CHECKING:  # pragma: no cover
    import typing_extensions as te

    from .app import Enumerator


T = t.TypeVar("T")

Loader = t.Callable[[t.IO[t.Any]], t.Mapping[str, t.Any]]

#: Loader and text mode for each config file suffix. Other suffixes are
#: read as JSON.
FILE_LOADERS: dict[str, tuple[Loader, bool]] = {
    ".json": (json.load, True),
    ".toml": (tomllib.load, False),
}


class ConfigAttribute(t.Generic[T]):
    """An enumerator attribute backed by a config key."""

    def __init__(self, key: str, convert: t.Callable[[t.Any], T] | None = None):
        self.key = key
        self.convert = convert

    @t.overload
    def __get__(self, obj: None, owner: None) -> te.Self: ...

    @t.overload
    def __get__(self, obj: Enumerator, owner: type[Enumerator]) -> T: ...

    def __get__(
        self, obj: Enumerator | None, owner: type[Enumerator] | None = None
    ) -> T | te.Self:
        if obj is None:
            return self

        value = obj.config[self.key]
        return value if self.convert is None else self.convert(value)  # type: ignore[no-any-return]

    def __set__(self, obj: Enumerator, value: t.Any) -> None:
        obj.config[self.key] = value


def import_string(import_name: str) -> t.Any:
    """Import an object from a dotted path. ``module.attr`` and
    ``module:attr`` are both accepted, a bare module path returns the
    module.
    """
    module_name, sep, attr = import_name.replace(":", ".").rpartition(".")

    if not sep:
        return importlib.import_module(import_name)

    try:
        return getattr(importlib.import_module(module_name), attr)
    except (ImportError, AttributeError):
        return importlib.import_module(import_name)


def _set_path(target: dict[str, t.Any], path: list[str], value: t.Any) -> None:
    *parents, leaf = path

    for part in parents:
        target = target.setdefault(part, {})

    target[leaf] = value


class Config(dict):  # type: ignore[type-arg]
    """The enumerator's settings. A plain dict that only accepts
    uppercase keys through its loaders, so a settings module can keep
    lowercase helpers.

    Settings usually come from a file and the environment::

        enumerator.config.from_config_file("counts.toml")
        enumerator.config.from_prefixed_env()  # ZEONGRAPH_WORKERS=4

    :param root_path: Relative file names are read from here.
    :param defaults: Initial values.
    """

    def __init__(
        self,
        root_path: str | os.PathLike[str],
        defaults: t.Mapping[str, t.Any] | None = None,
    ) -> None:
        super().__init__(defaults or {})
        self.root_path = root_path

    def from_mapping(
        self, mapping: t.Mapping[str, t.Any] | None = None, **kwargs: t.Any
    ) -> bool:
        """Copy the uppercase keys of ``mapping`` and ``kwargs``. Always
        returns ``True``.
        """
        items = dict(mapping or {}, **kwargs)
        self.update((k, v) for k, v in items.items() if k.isupper())
        return True

    def from_object(self, obj: object | str) -> None:
        """Copy the uppercase attributes of a module or class. A string
        is an import path, see :func:`import_string`.
        """
        if isinstance(obj, str):
            obj = import_string(obj)

        self.from_mapping({k: getattr(obj, k) for k in dir(obj)})

    def from_file(
        self,
        filename: str | os.PathLike[str],
        load: Loader,
        silent: bool = False,
        text: bool = True,
    ) -> bool:
        """Read a file with ``load`` and pass the result to
        :meth:`from_mapping`.

        .. code-block:: python

            enumerator.config.from_file("counts.json", load=json.load)
            enumerator.config.from_file("counts.toml", tomllib.load, text=False)

        :param filename: Absolute, or relative to :attr:`root_path`.
        :param load: Takes the open file and returns a mapping.
        :param silent: Return ``False`` if the file is missing.
        :param text: Open in text mode, ``False`` for binary.
        """
        path = os.path.join(self.root_path, filename)

        try:
            with open(path, "r" if text else "rb") as f:
                data = load(f)
        except OSError as e:
            if silent and e.errno in (errno.ENOENT, errno.EISDIR):
                return False

            e.strerror = f"Unable to load configuration file ({e.strerror})"
            raise

        return self.from_mapping(data)

    def from_config_file(
        self, filename: str | os.PathLike[str], silent: bool = False
    ) -> bool:
        """Like :meth:`from_file` with the loader picked from
        :data:`FILE_LOADERS` by suffix. The ``--config`` option uses this.
        """
        suffix = os.path.splitext(filename)[1].lower()
        load, text = FILE_LOADERS.get(suffix, FILE_LOADERS[".json"])
        return self.from_file(filename, load, silent=silent, text=text)

    def from_envvar(self, variable_name: str, silent: bool = False) -> bool:
        """Load the config file named by an environment variable, see
        :meth:`from_config_file`.

        :param silent: Return ``False`` if the variable is unset or the
            file is missing.
        """
        filename = os.environ.get(variable_name)

        if filename:
            return self.from_config_file(filename, silent=silent)

        if silent:
            return False

        raise RuntimeError(
            f"The environment variable {variable_name!r} is not set, it"
            " should name a JSON or TOML config file."
        )

    def from_prefixed_env(
        self, prefix: str = "ZEONGRAPH", *, loads: t.Callable[[str], t.Any] = json.loads
    ) -> bool:
        """Load every environment variable named ``{prefix}_KEY`` into
        ``KEY``, in sorted order. Values are decoded with ``loads`` and
        stay strings when that fails, so ``ZEONGRAPH_WORKERS=4`` gives the
        integer ``4``.

        ``__`` in a key sets an item of a nested dict, creating missing
        levels: ``ZEONGRAPH_A__B=1`` sets ``config["A"]["B"]``.
        """
        start = f"{prefix}_"

        for name in sorted(os.environ):
            if not name.startswith(start):
                continue

            raw = os.environ[name]

            try:
                value = loads(raw)
            except Exception:
                value = raw

            _set_path(self, name.removeprefix(start).split("__"), value)

        return True

    def lattice_options(self) -> LatticeOptions:
        """The :class:`~zeongraph.lattice.LatticeOptions` described by
        ``WORKERS``, ``LATTICE_CHUNKS``, ``ALLOW_LARGE`` and
        ``MAX_LATTICE_N``.
        """
        return LatticeOptions(
            workers=int(self["WORKERS"]),
            chunks=int(self["LATTICE_CHUNKS"]),
            allow_large=bool(self["ALLOW_LARGE"]),
            max_n=int(self["MAX_LATTICE_N"]),
        )

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {dict.__repr__(self)}>"
