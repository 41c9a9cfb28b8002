"""Stage 3: zero-shot facet gating on NLI entailment probabilities.

A sentence is accepted for a facet when its entailment probability clears the
positive threshold AND every counter-label probability stays at or below the
negative threshold (both bounds inclusive). Counter probabilities are
facet-independent, so they are computed once per sentence and reused.

Religion and occupation domains route sentences that no facet accepted (with
clean counters) to the catch-all facet "other"; geography drops them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import Domain, FacetId
from .errors import ConfigError

OTHER_FACET = "other"


@dataclass(frozen=True)
class ClassifierConfig:
    rho_plus: float = 0.5
    rho_minus: float = 0.3
    counter_labels: tuple[str, ...] = ("politics", "business")
    hypothesis_template: str = "This text is about {label}"

    def __post_init__(self):
        if not 0.0 <= self.rho_plus <= 1.0:
            raise ConfigError(f"rho_plus must be in [0,1], got {self.rho_plus}")
        if not 0.0 <= self.rho_minus <= 1.0:
            raise ConfigError(f"rho_minus must be in [0,1], got {self.rho_minus}")

    def counter_hypotheses(self) -> list[str]:
        return [self.hypothesis_template.format(label=label) for label in self.counter_labels]


@dataclass(frozen=True)
class FacetDecision:
    sentence: str  # sent_id
    facet: str
    p_facet: float
    counter_probs: dict[str, float] = field(compare=False)
    accepted: bool = False


def gate(p_facet: float, counter_probs: dict[str, float], config: ClassifierConfig) -> bool:
    """The acceptance predicate, isolated for oracle comparison."""
    if p_facet < config.rho_plus:
        return False
    return all(p <= config.rho_minus for p in counter_probs.values())


def entail_probability(premise: str, hypothesis: str, nli) -> float:
    p = nli.entail(premise, [hypothesis])[0]
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"provider returned probability {p} outside [0,1]")
    return p


def counter_probabilities(sentence_text: str, config: ClassifierConfig, nli) -> dict[str, float]:
    if not config.counter_labels:
        return {}
    probs = nli.entail(sentence_text, config.counter_hypotheses())
    return dict(zip(config.counter_labels, probs))


def classify(
    sentence_text: str,
    sent_id: str,
    facet: FacetId,
    config: ClassifierConfig,
    nli,
    counter_probs: dict[str, float] | None = None,
) -> FacetDecision:
    """One gated decision; pass precomputed counter_probs to reuse them."""
    if counter_probs is None:
        counter_probs = counter_probabilities(sentence_text, config, nli)
    p_facet = entail_probability(sentence_text, facet.hypothesis_text, nli)
    return FacetDecision(
        sentence=sent_id,
        facet=facet.id,
        p_facet=p_facet,
        counter_probs=counter_probs,
        accepted=gate(p_facet, counter_probs, config),
    )


def classify_all_facets(
    sentence_text: str,
    sent_id: str,
    domain: Domain,
    config: ClassifierConfig,
    nli,
    facet_subset: set[str] | None = None,
) -> list[FacetDecision]:
    """One decision per facet, plus the "other" routing.

    ``facet_subset`` restricts evaluation to facets that survived generic
    filtering for this sentence; None means every domain facet. When nothing
    is accepted and the domain routes to "other", a synthetic accepted
    decision is appended whose p_facet is the best facet probability seen
    (there is no NLI hypothesis for "other").
    """
    counter_probs = counter_probabilities(sentence_text, config, nli)
    decisions = []
    for facet in domain.facets:
        if facet_subset is not None and facet.id not in facet_subset:
            continue
        decisions.append(classify(sentence_text, sent_id, facet, config, nli, counter_probs))
    if (
        domain.routes_to_other
        and decisions
        and not any(d.accepted for d in decisions)
        and all(p <= config.rho_minus for p in counter_probs.values())
    ):
        decisions.append(
            FacetDecision(
                sentence=sent_id,
                facet=OTHER_FACET,
                p_facet=max(d.p_facet for d in decisions),
                counter_probs=counter_probs,
                accepted=True,
            )
        )
    return decisions
