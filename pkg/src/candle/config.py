"""Engine configuration: one JSON file drives a whole run.

Hyperparameter defaults are the tuned values the pipeline ships with; a
config file only needs paths plus whatever it overrides. Unknown keys are
rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import cluster, rank
from .errors import ConfigError
from .facetclf import ClassifierConfig
from .providers import ProviderEndpointConfig, ProviderSet, reference_providers, remote_providers


@dataclass
class PipelineConfig:
    corpus_path: str
    catalog_path: str
    checkpoint_dir: str
    output_kb: str

    provider_mode: str = "reference"  # reference | remote
    provider_endpoint: ProviderEndpointConfig | None = None

    rho_plus: float = 0.5
    rho_minus: float = 0.3
    counter_labels: tuple[str, ...] = ("politics", "business")
    hypothesis_template: str = "This text is about {label}"

    distance_threshold: float = cluster.DISTANCE_THRESHOLD
    pair_cap: int = cluster.PAIR_CAP
    min_summary_size: int = cluster.MIN_SUMMARY_SIZE
    max_summarized_clusters: int = cluster.MAX_SUMMARIZED_CLUSTERS

    theta: float = rank.THETA
    mask_token: str = rank.MASK_TOKEN
    pattern_file: str | None = None  # None -> packaged starter set
    max_clusters_per_pair: int = rank.MAX_CLUSTERS_PER_PAIR
    min_source_hosts: int = rank.MIN_SOURCE_HOSTS

    workers: int = 1

    def __post_init__(self):
        for name in ("rho_plus", "rho_minus", "theta"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must be in [0,1], got {value!r}")
        for name in ("pair_cap", "min_summary_size", "max_summarized_clusters", "max_clusters_per_pair", "workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.distance_threshold <= 0:
            raise ConfigError(f"distance_threshold must be positive, got {self.distance_threshold!r}")
        if self.min_source_hosts < 1:
            raise ConfigError(f"min_source_hosts must be >= 1, got {self.min_source_hosts!r}")
        if self.provider_mode not in ("reference", "remote"):
            raise ConfigError(f"provider_mode must be 'reference' or 'remote', got {self.provider_mode!r}")
        if self.provider_mode == "remote" and self.provider_endpoint is None:
            raise ConfigError("provider_mode 'remote' requires providers.base_url")

    def classifier_config(self) -> ClassifierConfig:
        return ClassifierConfig(
            rho_plus=self.rho_plus,
            rho_minus=self.rho_minus,
            counter_labels=tuple(self.counter_labels),
            hypothesis_template=self.hypothesis_template,
        )

    def similarity_params(self) -> rank.SimilarityParams:
        return rank.SimilarityParams(theta=self.theta, mask_token=self.mask_token)

    def providers(self) -> ProviderSet:
        if self.provider_mode == "remote":
            return remote_providers(self.provider_endpoint)
        return reference_providers()

    def pattern_set(self) -> rank.BadPatternSet:
        if self.pattern_file is not None:
            return rank.BadPatternSet.from_file(self.pattern_file)
        text = resources.files("candle.data").joinpath("bad_patterns.txt").read_text(encoding="utf-8")
        return rank.BadPatternSet(text.splitlines(), source="candle.data/bad_patterns.txt")


_TOP_KEYS = {
    "corpus_path", "catalog_path", "checkpoint_dir", "output_kb", "providers",
    "rho_plus", "rho_minus", "counter_labels", "hypothesis_template",
    "distance_threshold", "pair_cap", "min_summary_size", "max_summarized_clusters",
    "theta", "mask_token", "pattern_file", "max_clusters_per_pair",
    "min_source_hosts", "workers",
}
_PROVIDER_KEYS = {"mode", "base_url", "timeout_ms", "max_batch", "retries"}


def load_config(path) -> PipelineConfig:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON (line {exc.lineno}): {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config top level must be an object")
    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown config key(s): {sorted(unknown)}")
    for key in ("corpus_path", "catalog_path", "checkpoint_dir", "output_kb"):
        if key not in raw or not isinstance(raw[key], str):
            raise ConfigError(f"config requires string key '{key}'")

    base = path.parent

    def resolve(p: str | None) -> str | None:
        if p is None:
            return None
        return str((base / p).resolve()) if not Path(p).is_absolute() else p

    provider_mode = "reference"
    endpoint = None
    if "providers" in raw:
        prov = raw["providers"]
        if not isinstance(prov, dict):
            raise ConfigError("providers must be an object")
        unknown = set(prov) - _PROVIDER_KEYS
        if unknown:
            raise ConfigError(f"unknown providers key(s): {sorted(unknown)}")
        provider_mode = prov.get("mode", "reference")
        if "base_url" in prov:
            try:
                endpoint = ProviderEndpointConfig(
                    base_url=prov["base_url"],
                    timeout_ms=prov.get("timeout_ms", 30_000),
                    max_batch=prov.get("max_batch", 64),
                    retries=prov.get("retries", 2),
                )
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc

    counter_labels = raw.get("counter_labels", ["politics", "business"])
    if not isinstance(counter_labels, list) or not all(isinstance(c, str) for c in counter_labels):
        raise ConfigError("counter_labels must be a list of strings")

    kwargs = {
        key: raw[key]
        for key in _TOP_KEYS - {"corpus_path", "catalog_path", "checkpoint_dir", "output_kb", "providers", "counter_labels", "pattern_file"}
        if key in raw
    }
    try:
        return PipelineConfig(
            corpus_path=resolve(raw["corpus_path"]),
            catalog_path=resolve(raw["catalog_path"]),
            checkpoint_dir=resolve(raw["checkpoint_dir"]),
            output_kb=resolve(raw["output_kb"]),
            provider_mode=provider_mode,
            provider_endpoint=endpoint,
            counter_labels=tuple(counter_labels),
            pattern_file=resolve(raw.get("pattern_file")),
            **kwargs,
        )
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
