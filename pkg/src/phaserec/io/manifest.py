"""Run manifests: flat key = value text files describing a scenario.

Every CLI run echoes its full manifest into the output directory, so any
emitted file can be regenerated from the manifest and seed alone.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from ..errors import FormatError

FORMAT_VERSION = 1

GENERATORS = ("wavefront", "peaks", "external")
METHODS = ("variational", "poisson", "lineintegral")


@dataclass
class RunManifest:
    scenario: str = "run"
    generator: str = "wavefront"
    m: int = 640
    n: int = 480
    a: float = -1.0
    b: float = 1.0
    c: float = -1.0
    d: float = 1.0
    snr_db: float | None = None  # None = noiseless
    noise_seed: int = 0
    lam: float = 1.0
    tau: float | None = None  # None = auto
    delta1: float = 1e-7
    delta2: float = 1e-7
    delta3: float = 1e-7
    k_max: int = 15000
    init: str = "random"  # random | zeros | lineintegral
    init_seed: int = 20211
    method: str = "variational"
    out_dir: str = "."
    format_version: int = FORMAT_VERSION

    def validate(self):
        if self.generator not in GENERATORS:
            raise FormatError(f"unknown generator {self.generator!r}")
        if self.method not in METHODS:
            raise FormatError(f"unknown method {self.method!r}")
        if self.format_version != FORMAT_VERSION:
            raise FormatError(f"unsupported format_version {self.format_version}")

    def render(self) -> str:
        lines = []
        for f in fields(self):
            v = getattr(self, f.name)
            lines.append(f"{f.name} = {'none' if v is None else v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "RunManifest":
        known = {f.name: f for f in fields(cls)}
        kwargs = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise FormatError(f"manifest line {lineno} is not 'key = value': {raw!r}")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in known:
                raise FormatError(f"unknown manifest key {key!r} (line {lineno})")
            kwargs[key] = _coerce(known[key], value)
        man = cls(**kwargs)
        man.validate()
        return man

    def write(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.render())

    @classmethod
    def read(cls, path) -> "RunManifest":
        with open(path) as fh:
            return cls.parse(fh.read())


def _coerce(field, value: str):
    if value == "none":
        return None
    t = field.type
    if t == "int":
        return int(value)
    if t in ("float", "float | None"):
        return float(value)
    return value
