"""Small text helpers used across stages: phrase normalization, host extraction."""

from __future__ import annotations

import re
from urllib.parse import urlparse

_WS = re.compile(r"\s+")

# Two-level public suffixes we may see in web-source URLs. A full public-suffix
# snapshot is overkill for host-diversity counting; unknown hosts fall back to
# the last two labels.
_TWO_LEVEL_SUFFIXES = frozenset(
    {
        "co.uk", "org.uk", "gov.uk", "ac.uk", "me.uk", "net.uk",
        "com.au", "net.au", "org.au", "edu.au", "gov.au",
        "co.jp", "ne.jp", "or.jp", "ac.jp", "go.jp",
        "com.br", "net.br", "org.br", "gov.br",
        "co.in", "net.in", "org.in", "gov.in", "ac.in",
        "com.cn", "net.cn", "org.cn", "gov.cn", "edu.cn",
        "co.nz", "net.nz", "org.nz", "govt.nz",
        "co.za", "org.za", "net.za", "gov.za",
        "com.mx", "com.ar", "com.tr", "com.sg", "com.hk", "com.tw",
        "co.kr", "or.kr", "go.kr",
    }
)


def normalize_phrase(phrase: str) -> str:
    """Case-fold and collapse internal whitespace. No stemming."""
    return _WS.sub(" ", phrase.strip()).casefold()


def registrable_domain(url: str) -> str:
    """Registrable (site-owner) domain of a URL, public-suffix aware.

    ``https://blog.example.co.uk/p?x=1`` -> ``example.co.uk``. Hosts without a
    recognized two-level suffix keep their last two labels; bare or malformed
    hosts are returned lowercased as-is.
    """
    host = urlparse(url).netloc if "//" in url else urlparse("//" + url).netloc
    host = host.split("@")[-1].split(":")[0].strip().lower().rstrip(".")
    if not host:
        return ""
    labels = host.split(".")
    if len(labels) <= 2:
        return host
    if ".".join(labels[-2:]) in _TWO_LEVEL_SUFFIXES:
        return ".".join(labels[-3:])
    return ".".join(labels[-2:])
