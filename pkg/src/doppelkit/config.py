"""Run configuration: TOML-backed, with every model default overridable."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

import toml

from .dsm.count import CountModelConfig
from .dsm.sgns import SgnsConfig
from .errors import ConfigError

MODEL_KINDS = ("count", "sgns", "additive", "contextual")


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    model_id: str
    params: dict

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ConfigError(f"unknown model kind {self.kind!r}")

    def count_config(self) -> CountModelConfig:
        return CountModelConfig(
            window=int(self.params.get("window", 5)),
            max_context_vocab=int(self.params.get("max_context_vocab", 10000)),
            weighting=str(self.params.get("weighting", "ppmi")),
        )

    def sgns_config(self, seed: int) -> SgnsConfig:
        return SgnsConfig(
            dim=int(self.params.get("dim", 100)),
            window=int(self.params.get("window", 5)),
            epochs=int(self.params.get("epochs", 10)),
            negatives=int(self.params.get("negatives", 5)),
            initial_lr=float(self.params.get("initial_lr", 0.025)),
            min_lr=float(self.params.get("min_lr", 1e-4)),
            subsample_t=float(self.params.get("subsample_t", 1e-3)),
            min_count=int(self.params.get("min_count", 1)),
            seed=seed,
        )

    def background_sgns_config(self, seed: int) -> SgnsConfig:
        return SgnsConfig(
            dim=int(self.params.get("background_dim", 50)),
            window=int(self.params.get("background_window", 5)),
            epochs=int(self.params.get("background_epochs", 5)),
            negatives=int(self.params.get("negatives", 5)),
            initial_lr=float(self.params.get("initial_lr", 0.025)),
            min_lr=float(self.params.get("min_lr", 1e-4)),
            subsample_t=float(self.params.get("subsample_t", 1e-3)),
            min_count=int(self.params.get("background_min_count", 2)),
            seed=seed,
        )

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "id": self.model_id}
        out.update(self.params)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ModelSpec":
        data = dict(data)
        try:
            kind = data.pop("kind")
        except KeyError:
            raise ConfigError("model entry needs a 'kind'") from None
        model_id = data.pop("id", kind)
        return cls(kind=kind, model_id=str(model_id), params=data)


@dataclass(frozen=True)
class RunConfig:
    dataset_root: str = ""
    output_dir: str = "out"
    seed: int = 7
    min_mentions: int = 2
    split_rule: str = "tokens"
    direction: str = "symmetric"
    workers: int = 1
    n_perm: int = 10000
    models: tuple[ModelSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.split_rule not in ("tokens", "sentences"):
            raise ConfigError(f"split must be 'tokens' or 'sentences', not {self.split_rule!r}")
        if self.direction not in ("a_to_b", "b_to_a", "symmetric"):
            raise ConfigError(f"bad direction {self.direction!r}")
        if self.min_mentions < 0:
            raise ConfigError("min_mentions must be >= 0")
        if not self.models:
            raise ConfigError("at least one model must be enabled")
        ids = [m.model_id for m in self.models]
        if len(set(ids)) != len(ids):
            raise ConfigError("model ids must be unique")

    def to_dict(self) -> dict:
        return {
            "run": {
                "dataset": self.dataset_root,
                "out": self.output_dir,
                "seed": self.seed,
                "min_mentions": self.min_mentions,
                "split": self.split_rule,
                "direction": self.direction,
                "workers": self.workers,
                "n_perm": self.n_perm,
            },
            "models": [m.to_dict() for m in self.models],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        run = data.get("run", {})
        models = tuple(ModelSpec.from_dict(m) for m in data.get("models", []))
        return cls(
            dataset_root=str(run.get("dataset", "")),
            output_dir=str(run.get("out", "out")),
            seed=int(run.get("seed", 7)),
            min_mentions=int(run.get("min_mentions", 2)),
            split_rule=str(run.get("split", "tokens")),
            direction=str(run.get("direction", "symmetric")),
            workers=int(run.get("workers", 1)),
            n_perm=int(run.get("n_perm", 10000)),
            models=models,
        )

    def replace(self, **kwargs) -> "RunConfig":
        data = self.to_dict()
        for key, value in kwargs.items():
            if value is None:
                continue
            mapped = {"dataset_root": "dataset", "output_dir": "out",
                      "split_rule": "split"}.get(key, key)
            data["run"][mapped] = value
        return RunConfig.from_dict(data)


def default_models() -> tuple[ModelSpec, ...]:
    return (
        ModelSpec("count", "count", {}),
        ModelSpec("sgns", "sgns", {}),
    )


def load_config(path: str | Path) -> RunConfig:
    try:
        data = toml.loads(Path(path).read_text(encoding="utf-8"))
    except toml.TomlDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return RunConfig.from_dict(data)


def save_config(config: RunConfig, path: str | Path) -> None:
    Path(path).write_text(toml.dumps(config.to_dict()), encoding="utf-8")


def derive_seed(*parts) -> int:
    """Stable 63-bit seed from any mix of strings and integers."""
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little") >> 1
