"""
Triple sampler

Las Vegas sampling of a coherent triple whose gene is prescribed. The
v-digits are drawn letter by letter, gamma' uniformly by digit rejection, and
the triple is solved from v and gamma'. The only failure is a v-sequence
divisible by q+1; conditioned on success the output is uniform over the
coherent triples with that gene.
"""

import logging
import random
from typing import List, Optional

from src.arithmetic import CoherentTriple, check_parameters, triple_from_v
from src.config import get_config
from src.core.exceptions import SamplerFailure, UnsupportedPrime

from .gene import Gene
from .letters import Letter


logger = logging.getLogger(__name__)


def draw_v(g: Gene, p: int, rng: random.Random) -> List[int]:
    """
    A/AB -> 0, B -> 1, O followed by O -> uniform in [1, p-1],
    O followed by anything else -> uniform in [2, p-1].
    """
    v = []
    for i, x in enumerate(g.letters):
        if x in (Letter.A, Letter.AB):
            v.append(0)
        elif x == Letter.B:
            v.append(1)
        elif g.at(i + 1) == Letter.O:
            v.append(rng.randint(1, p - 1))
        else:
            v.append(rng.randint(2, p - 1))
    return v


def draw_gamma_prime(p: int, f: int, rng: random.Random) -> List[int]:
    """f uniform digits, redrawn while they are all p-1."""
    while True:
        digits = [rng.randrange(p) for _ in range(f)]
        if any(d != p - 1 for d in digits):
            return digits


def sample_triple(g: Gene, p: int, seed: Optional[int] = None, rng: Optional[random.Random] = None) -> CoherentTriple:
    """
    One attempt at drawing a coherent triple with gene g.

    Raises:
        UnsupportedPrime: p == 3
        SamplerFailure: the drawn v is divisible by q+1 (retry)
    """
    if p == 3:
        raise UnsupportedPrime("the sampler needs p > 3", {"p": p})
    check_parameters(p, g.f)
    rng = rng or random.Random(seed)
    f = g.f
    v = draw_v(g, p, rng)
    gamma_prime = draw_gamma_prime(p, f, rng)
    if all(v[i] == v[i + f] for i in range(f)):
        raise SamplerFailure("drawn v is divisible by q+1", {"v": v})
    return triple_from_v(p, f, v, gamma_prime)


def sample_with_retries(
    g: Gene,
    p: int,
    seed: Optional[int] = None,
    max_retries: Optional[int] = None,
) -> CoherentTriple:
    """Retry sample_triple with one seeded generator until success or max_retries failures."""
    config = get_config().sampler
    if max_retries is None:
        max_retries = config.max_retries
    if seed is None:
        seed = config.seed
    rng = random.Random(seed)
    for attempt in range(1, max_retries + 1):
        try:
            return sample_triple(g, p, rng=rng)
        except SamplerFailure:
            logger.debug("Sampler attempt %d/%d failed", attempt, max_retries)
    raise SamplerFailure(
        f"no coherent triple after {max_retries} attempts",
        {"retries": max_retries, "p": p, "f": g.f},
    )
