"""Local growth rules for the cells of a growth diagram.

Each cell of a diagram has four corner labels

        nu -- lam
        |      |
        rho -- mu

together with a cell entry m (for the standard rules a 0/1 cross marker).
The forward rule computes lam from (rho, mu, nu, m); the backward rule
recovers (rho, m) from (mu, nu, lam).  Five rule sets are provided:

* ``standard``       -- partial permutation fillings, chains of partitions
                        growing by at most one square per step;
* ``rsk``            -- arbitrary entries, horizontal strips in both
                        directions;
* ``dual-rsk``       -- 0/1 entries, horizontal strips rightward and
                        vertical strips downward;
* ``rsk-prime``      -- 0/1 entries, the reflection of dual-rsk;
* ``dual-rsk-prime`` -- arbitrary entries, vertical strips both ways.

The carry-based rules operate on one part index at a time, exactly as in
their defining descriptions, rather than through bumping.
"""

from dataclasses import dataclass

from .fillings import ARBITRARY, PARTIAL_PERMUTATION, ZERO_ONE
from .partitions import (add_square_in_row, contains, diff_row,
                         differs_by_one_square, intersect, is_horizontal_strip,
                         is_vertical_strip, make_partition, part, union)

VARIANTS = ("standard", "rsk", "dual-rsk", "rsk-prime", "dual-rsk-prime")


def _check_small_step(bigger, smaller, who):
    if not (bigger == smaller or differs_by_one_square(bigger, smaller)):
        raise ValueError(f"{who}: {bigger} / {smaller} is not a step of <= 1 square")


def forward_standard(rho, mu, nu, m):
    """Forward rule for partial permutation fillings.

    The six defining cases are mutually exclusive; the frame conditions
    (mu and nu each contain rho and exceed it by at most one square, and a
    cross forces rho = mu = nu) are checked eagerly.
    """
    if m not in (0, 1):
        raise ValueError(f"standard rules need a 0/1 entry, got {m}")
    _check_small_step(mu, rho, "mu/rho")
    _check_small_step(nu, rho, "nu/rho")
    if m:
        if not (rho == mu == nu):
            raise ValueError("cross in a cell whose corners are not all equal")
        return add_square_in_row(rho, 1)
    if rho == mu == nu:
        return rho
    if rho == mu != nu:
        return nu
    if rho == nu != mu:
        return mu
    if mu != nu:
        return union(mu, nu)
    # rho != mu = nu: both grew in the same row k; push to row k + 1
    k = diff_row(mu, rho)
    return add_square_in_row(mu, k + 1)


def backward_standard(mu, nu, lam):
    """Inverse of the standard forward rule: returns (rho, m)."""
    _check_small_step(lam, mu, "lam/mu")
    _check_small_step(lam, nu, "lam/nu")
    if lam == mu == nu:
        return lam, 0
    if lam == mu != nu:
        return nu, 0
    if lam == nu != mu:
        return mu, 0
    if mu != nu:
        return intersect(mu, nu), 0
    # mu = nu, both strictly below lam
    k = diff_row(lam, mu)
    if k == 1:
        return mu, 1
    parts = list(mu)
    parts[k - 2] -= 1
    return make_partition(parts), 0


def forward_rsk(rho, mu, nu, m):
    """Carry rule with horizontal strips in both directions."""
    if m < 0:
        raise ValueError("negative entry")
    if not is_horizontal_strip(mu, rho):
        raise ValueError(f"mu/rho = {mu}/{rho} not a horizontal strip")
    if not is_horizontal_strip(nu, rho):
        raise ValueError(f"nu/rho = {nu}/{rho} not a horizontal strip")
    lam = []
    carry = m
    i = 1
    while True:
        li = max(part(mu, i), part(nu, i)) + carry
        if li == 0:
            break
        lam.append(li)
        carry = min(part(mu, i), part(nu, i)) - part(rho, i)
        i += 1
    return make_partition(lam)


def backward_rsk(mu, nu, lam):
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"lam/mu = {lam}/{mu} not a horizontal strip")
    if not is_horizontal_strip(lam, nu):
        raise ValueError(f"lam/nu = {lam}/{nu} not a horizontal strip")
    rho = [0] * len(lam)
    carry = 0
    for i in range(len(lam), 0, -1):
        rho[i - 1] = min(part(mu, i), part(nu, i)) - carry
        carry = part(lam, i) - max(part(mu, i), part(nu, i))
    return make_partition(rho), carry


def forward_dual_rsk(rho, mu, nu, m):
    """Carry rule: horizontal strips rightward, vertical strips downward."""
    if m not in (0, 1):
        raise ValueError(f"dual rules need a 0/1 entry, got {m}")
    if not is_horizontal_strip(mu, rho):
        raise ValueError(f"mu/rho = {mu}/{rho} not a horizontal strip")
    if not is_vertical_strip(nu, rho):
        raise ValueError(f"nu/rho = {nu}/{rho} not a vertical strip")
    lam = []
    carry = m
    i = 1
    while True:
        li = max(part(mu, i) + carry, part(nu, i))
        if li == 0:
            break
        lam.append(li)
        carry = min(part(mu, i) + carry, part(nu, i)) - part(rho, i)
        i += 1
    return make_partition(lam)


def backward_dual_rsk(mu, nu, lam):
    if not is_vertical_strip(lam, mu):
        raise ValueError(f"lam/mu = {lam}/{mu} not a vertical strip")
    if not is_horizontal_strip(lam, nu):
        raise ValueError(f"lam/nu = {lam}/{nu} not a horizontal strip")
    rho = [0] * len(lam)
    carry = 0
    for i in range(len(lam), 0, -1):
        rho[i - 1] = min(part(mu, i), part(nu, i) - carry)
        carry = part(lam, i) - max(part(mu, i), part(nu, i) - carry)
    return make_partition(rho), carry


def forward_rsk_prime(rho, mu, nu, m):
    """Reflection of the dual rule in the diagonal: mu and nu swap roles."""
    if not is_vertical_strip(mu, rho):
        raise ValueError(f"mu/rho = {mu}/{rho} not a vertical strip")
    if not is_horizontal_strip(nu, rho):
        raise ValueError(f"nu/rho = {nu}/{rho} not a horizontal strip")
    return forward_dual_rsk(rho, nu, mu, m)


def backward_rsk_prime(mu, nu, lam):
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"lam/mu = {lam}/{mu} not a horizontal strip")
    if not is_vertical_strip(lam, nu):
        raise ValueError(f"lam/nu = {lam}/{nu} not a vertical strip")
    return backward_dual_rsk(nu, mu, lam)


def forward_dual_rsk_prime(rho, mu, nu, m):
    """Carry rule with vertical strips in both directions."""
    if m < 0:
        raise ValueError("negative entry")
    if not is_vertical_strip(mu, rho):
        raise ValueError(f"mu/rho = {mu}/{rho} not a vertical strip")
    if not is_vertical_strip(nu, rho):
        raise ValueError(f"nu/rho = {nu}/{rho} not a vertical strip")
    lam = []
    carry = m
    i = 1
    while True:
        equal = 1 if part(rho, i) == part(mu, i) == part(nu, i) else 0
        used = min(equal, carry)
        li = max(part(mu, i), part(nu, i)) + used
        if li == 0:
            break
        lam.append(li)
        carry = carry - used + min(part(mu, i), part(nu, i)) - part(rho, i)
        i += 1
    return make_partition(lam)


def backward_dual_rsk_prime(mu, nu, lam):
    if not is_vertical_strip(lam, mu):
        raise ValueError(f"lam/mu = {lam}/{mu} not a vertical strip")
    if not is_vertical_strip(lam, nu):
        raise ValueError(f"lam/nu = {lam}/{nu} not a vertical strip")
    rho = [0] * len(lam)
    carry = 0
    for i in range(len(lam), 0, -1):
        equal = 1 if part(mu, i) == part(nu, i) == part(lam, i) else 0
        rho[i - 1] = min(part(mu, i), part(nu, i)) - min(equal, carry)
        carry = carry - min(equal, carry) + part(lam, i) - max(part(mu, i), part(nu, i))
    return make_partition(rho), carry


@dataclass(frozen=True)
class Variant:
    """Bundle of local rules plus the step shapes they produce."""

    name: str
    forward: object
    backward: object
    filling_class: str
    # predicates for the border steps: right step grows prev -> nxt,
    # down step shrinks prev -> nxt
    right_step: object
    down_step: object


def _small_growth(prev, nxt):
    return prev == nxt or differs_by_one_square(nxt, prev)


VARIANT_TABLE = {
    "standard": Variant(
        "standard", forward_standard, backward_standard, PARTIAL_PERMUTATION,
        right_step=lambda prev, nxt: _small_growth(prev, nxt),
        down_step=lambda prev, nxt: _small_growth(nxt, prev)),
    "rsk": Variant(
        "rsk", forward_rsk, backward_rsk, ARBITRARY,
        right_step=lambda prev, nxt: is_horizontal_strip(nxt, prev),
        down_step=lambda prev, nxt: is_horizontal_strip(prev, nxt)),
    "dual-rsk": Variant(
        "dual-rsk", forward_dual_rsk, backward_dual_rsk, ZERO_ONE,
        right_step=lambda prev, nxt: is_horizontal_strip(nxt, prev),
        down_step=lambda prev, nxt: is_vertical_strip(prev, nxt)),
    "rsk-prime": Variant(
        "rsk-prime", forward_rsk_prime, backward_rsk_prime, ZERO_ONE,
        right_step=lambda prev, nxt: is_vertical_strip(nxt, prev),
        down_step=lambda prev, nxt: is_horizontal_strip(prev, nxt)),
    "dual-rsk-prime": Variant(
        "dual-rsk-prime", forward_dual_rsk_prime, backward_dual_rsk_prime,
        ARBITRARY,
        right_step=lambda prev, nxt: is_vertical_strip(nxt, prev),
        down_step=lambda prev, nxt: is_vertical_strip(prev, nxt)),
}


def get_variant(name: str) -> Variant:
    try:
        return VARIANT_TABLE[name]
    except KeyError:
        raise ValueError(f"unknown variant {name!r}; choose from {VARIANTS}") from None
