from __future__ import annotations

import numpy as np
import pytest

from candle.errors import ProviderError
from candle.providers import ProviderEndpointConfig, remote_providers
from candle.providers.reference import ReferenceEmbedder, ReferenceNli, ReferenceSummarizer
from candle.providers.remote import RemoteEmbedder, RemoteEndpoint, RemoteNli

from .wire_stub import WireStub


def endpoint_config(stub, **kw):
    return ProviderEndpointConfig(base_url=stub.base_url, timeout_ms=5000, **kw)


class TestReferenceEmbedder:
    def test_deterministic(self):
        e = ReferenceEmbedder()
        a = e.embed(["Germans like their currywurst."])
        b = e.embed(["Germans like their currywurst."])
        assert np.array_equal(a, b)

    def test_unit_norm(self):
        e = ReferenceEmbedder()
        for row in e.embed(["a", "bb", "counting characters", ""]):
            assert abs(np.linalg.norm(row) - 1.0) <= 1e-6

    def test_distinct_texts_not_identical(self):
        e = ReferenceEmbedder()
        v = e.embed(["aaa", "zzz"])
        cosine = float(v[0] @ v[1])
        assert cosine < 0.99
        # frozen from the documented hashing scheme
        assert cosine == pytest.approx(0.0, abs=1e-12)

    def test_dimension_fixed(self):
        e = ReferenceEmbedder()
        assert e.embed(["x"]).shape == (1, 64)
        assert e.dim == 64


class TestReferenceNli:
    def test_cue_hit_values(self):
        nli = ReferenceNli()
        # "beer" and "drink" both sit in the drinks cue list: 0.05 + 2*0.25
        assert nli.entail("Beer is a drink.", ["This text is about drinks"]) == [0.55]

    def test_single_hit_meets_published_floor(self):
        nli = ReferenceNli()
        (p,) = nli.entail("Cold beer refreshes.", ["This text is about drinks"])
        assert p >= 0.30

    def test_no_cues_base_only(self):
        assert ReferenceNli().entail("Xylophones zing.", ["This text is about drinks"]) == [0.05]

    def test_many_hits_capped(self):
        (p,) = ReferenceNli().entail("beer wine coffee tea ale", ["This text is about drinks"])
        assert p == 1.0

    def test_unknown_label_base_only(self):
        assert ReferenceNli().entail("Beer is a drink.", ["This text is about zebras"]) == [0.05]

    def test_non_template_hypothesis_overlap(self):
        (p,) = ReferenceNli().entail("Beer is a drink.", ["Beer is a drink."])
        assert p >= 0.5
        assert p == pytest.approx(0.95)

    def test_order_preserved(self):
        nli = ReferenceNli()
        hyps = ["This text is about drinks", "This text is about politics"]
        probs = nli.entail("Beer is a drink.", hyps)
        assert probs == [nli.entail("Beer is a drink.", [h])[0] for h in hyps]


class TestReferenceSummarizer:
    def test_returns_empty_to_force_medoid(self):
        assert ReferenceSummarizer().summarize(["Beer is a drink."]) == ""


class TestRemoteCall:
    def test_embed_batch_order_and_values(self):
        with WireStub() as stub:
            remote = remote_providers(endpoint_config(stub))
            texts = [f"sentence number {i}." for i in range(8)]
            expected = ReferenceEmbedder().embed(texts)
            got = remote.embedder.embed(texts)
            assert np.allclose(got, expected, atol=0)

    def test_batching_respects_max_batch(self):
        with WireStub() as stub:
            remote = RemoteEmbedder(endpoint_config(stub, max_batch=3))
            remote.embed([f"t{i}" for i in range(8)])
            embed_calls = [p for path, p in stub.request_log if path == "/v1/embed"]
            assert [len(c["texts"]) for c in embed_calls] == [3, 3, 2]

    def test_length_mismatch_is_schema_error(self):
        with WireStub() as stub:
            stub.overrides["/v1/embed"] = lambda payload: (200, {"vectors": [[0.0, 1.0]] * (len(payload["texts"]) - 1)})
            remote = RemoteEmbedder(endpoint_config(stub))
            with pytest.raises(ProviderError, match="vectors for"):
                remote.embed([f"t{i}" for i in range(8)])

    def test_transient_503_then_success(self):
        with WireStub() as stub:
            stub.fail_next["/v1/nli"] = 1
            sleeps = []
            remote = RemoteNli(endpoint_config(stub, retries=2))
            remote.endpoint._sleep = sleeps.append
            probs = remote.entail("Beer is a drink.", ["This text is about drinks"])
            assert probs == [0.55]
            assert len(sleeps) == 1  # exactly one retry

    def test_exhausted_retries_raise(self):
        with WireStub() as stub:
            stub.fail_next["/v1/nli"] = 5
            remote = RemoteNli(endpoint_config(stub, retries=1))
            remote.endpoint._sleep = lambda s: None
            with pytest.raises(ProviderError, match="after 2 attempts"):
                remote.entail("x", ["This text is about drinks"])

    def test_backoff_is_exponential(self):
        with WireStub() as stub:
            stub.fail_next["/v1/nli"] = 2
            sleeps = []
            remote = RemoteNli(endpoint_config(stub, retries=3))
            remote.endpoint._sleep = sleeps.append
            remote.entail("Beer is a drink.", ["This text is about drinks"])
            assert len(sleeps) == 2
            assert sleeps[1] == pytest.approx(sleeps[0] * 2)

    def test_probability_out_of_range_rejected(self):
        with WireStub() as stub:
            stub.overrides["/v1/nli"] = lambda payload: (200, {"entail_probs": [1.5]})
            remote = RemoteNli(endpoint_config(stub))
            with pytest.raises(ProviderError, match="outside"):
                remote.entail("x", ["h"])

    def test_embedding_dimension_change_mid_run_rejected(self):
        with WireStub() as stub:
            remote = RemoteEmbedder(endpoint_config(stub))
            remote.embed(["a"])
            stub.overrides["/v1/embed"] = lambda payload: (200, {"vectors": [[0.0, 1.0]] * len(payload["texts"])})
            with pytest.raises(ProviderError, match="dimension changed"):
                remote.embed(["b"])

    def test_health_schema(self):
        with WireStub() as stub:
            health = RemoteEndpoint(endpoint_config(stub)).health()
            assert health["status"] == "ok"
            assert set(health["models"]) == {"annotator", "embedder", "nli", "summarizer"}
            assert health["embedding_dim"] == 64
            assert health["max_batch"] >= 1

    def test_remote_annotator_matches_reference(self, providers):
        with WireStub() as stub:
            remote = remote_providers(endpoint_config(stub))
            text = "Germans like their currywurst."
            assert remote.annotator.annotate(text) == providers.annotator.annotate(text)

    def test_summarize_501_is_provider_error(self):
        with WireStub() as stub:
            stub.overrides["/v1/summarize"] = lambda payload: (501, {"error": "disabled"})
            remote = remote_providers(endpoint_config(stub))
            with pytest.raises(ProviderError):
                remote.summarizer.summarize(["Beer is a drink."])


class TestEndpointConfig:
    def test_invalid_batch_rejected(self):
        with pytest.raises(ValueError):
            ProviderEndpointConfig(base_url="http://x", max_batch=0)

    def test_negative_retries_rejected(self):
        with pytest.raises(ValueError):
            ProviderEndpointConfig(base_url="http://x", retries=-1)
