"""Randomized identities across modules."""

from hypothesis import given, settings
from hypothesis import strategies as st

from satcomb import build
from satcomb.minimal import minimal_elements
from satcomb.paths import count_dominant_paths, iterated_tensor
from satcomb.satake import constant_term_predicted, kostka_labels, stratum_dim, whittaker_predicted
from satcomb.weights import in_omega_labels, mult_labels, omega_labels, weyl_dimension_labels
from satcomb.weyl import act, dominant_representative, elements, is_dominant, orbit, partial_root_sum

DATA = {
    name: build(*name.split(":"))
    for name in ["A1:sc", "A1:adj", "A2:sc", "A2:adj", "B2:sc", "B2:adj", "G2:sc", "A1xA1:adj", "A3:adj", "C3:adj"]
}

datum = st.sampled_from(sorted(DATA)).map(DATA.get)


@st.composite
def datum_and_coweight(draw, bound=3):
    d = draw(datum)
    nu = tuple(draw(st.integers(-bound, bound)) for _ in range(d.rank))
    return d, nu


@st.composite
def datum_and_dominant(draw, bound=2):
    d = draw(datum)
    while True:
        lab = tuple(draw(st.integers(0, bound)) for _ in range(d.rank))
        if d.in_lattice(lab):
            return d, lab


@given(datum_and_coweight(), st.lists(st.integers(0, 2), max_size=6))
def test_action_preserves_form(dn, word):
    d, nu = dn
    word = tuple(i for i in word if i < d.rank)
    w_nu = act(d, word, nu)
    assert d.form(w_nu, w_nu) == d.form(nu, nu)
    assert dominant_representative(d, w_nu)[0] == dominant_representative(d, nu)[0]


@given(datum_and_coweight())
def test_dominant_representative_word(dn):
    d, nu = dn
    dom, word = dominant_representative(d, nu)
    assert is_dominant(d, dom)
    assert act(d, word, nu) == dom
    assert nu in orbit(d, dom)


@given(datum_and_dominant())
def test_multiplicities_sum_to_dimension(dl):
    d, lam = dl
    total = sum(mult_labels(d, lam, nu) for nu in omega_labels(d, lam))
    assert total == weyl_dimension_labels(d, lam)


@given(datum_and_dominant(), datum_and_dominant())
def test_kostka_at_one_is_multiplicity(dl, _):
    d, lam = dl
    for mu in omega_labels(d, lam):
        if all(x >= 0 for x in mu):
            assert kostka_labels(d, lam, mu)(1) == mult_labels(d, lam, mu)


@given(datum_and_dominant(), st.data())
def test_tables(dl, data):
    d, lam_lab = dl
    lam = d.from_labels(lam_lab)
    om = omega_labels(d, lam_lab)
    nu_lab = data.draw(st.sampled_from(om))
    nu = d.from_labels(nu_lab)
    assert not constant_term_predicted(d, lam, nu).is_zero
    s = stratum_dim(d, lam, nu)
    assert 0 <= 2 * s <= 2 * sum(a * x for a, x in zip(d.rho2, lam_lab))
    off = tuple(x + 1 for x in lam_lab)
    if d.in_lattice(off):
        assert constant_term_predicted(d, lam, d.from_labels(off)).is_zero
        assert whittaker_predicted(d, lam, d.from_labels(off)).is_zero
    assert not whittaker_predicted(d, lam, lam).is_zero


@settings(max_examples=30)
@given(datum_and_dominant(bound=1), st.data())
def test_stratum_dim_on_orbit_matches_root_sum(dl, data):
    d, lam_lab = dl
    lam = d.from_labels(lam_lab)
    w = data.draw(st.sampled_from(elements(d)))
    w_lam = act(d, w, lam)
    # <rho, lam + w lam> = <rho + w^-1 rho, lam>, and rho + w^-1 rho sums the alpha > 0 with w alpha > 0
    root_sum = partial_root_sum(d, w)
    assert stratum_dim(d, lam, w_lam) == sum(a * x for a, x in zip(root_sum, lam_lab))


@settings(max_examples=40)
@given(datum, st.data())
def test_paths_count_tensor(d, data):
    m = [mu for mu, _ in minimal_elements(d)]
    seq = data.draw(st.lists(st.sampled_from(m), min_size=1, max_size=3))
    tens = iterated_tensor(d, seq)
    dims = 1
    for mu in seq:
        dims *= weyl_dimension_labels(d, d.labels(mu))
    assert sum(c * weyl_dimension_labels(d, d.labels(k)) for k, c in tens.items()) == dims
    for nu, c in tens.items():
        assert count_dominant_paths(d, seq, nu) == c
        assert in_omega_labels(d, tuple(sum(x) for x in zip(*(d.labels(mu) for mu in seq))), d.labels(nu))
