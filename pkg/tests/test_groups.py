import itertools

import pytest

from grouptrix.errors import NotNormalError, SpecError
from grouptrix.groups import (
    TOP,
    SubgroupHandle,
    alternating_group,
    cayley_table_group,
    center,
    centralizer,
    cyclic_classes,
    cyclic_group,
    dihedral_group,
    direct_product,
    element_order,
    elementary_abelian_group,
    engel_related,
    generalized_quaternion_group,
    generated_closure,
    generates_whole,
    make_group,
    modular_p3_group,
    parse_permutation_line,
    permutation_group,
    psl2_group,
    quotient,
    series,
    sl2_group,
    subgroup_is,
    symmetric_group,
)


def brute_closure(G, seeds):
    members = {G.identity} | set(seeds)
    while True:
        new = {G.mul(a, b) for a in members for b in members} - members
        if not new:
            return members
        members |= new


def test_make_group_orders():
    assert make_group("cyclic:1").order == 1
    assert make_group("cyclic:6").order == 6
    assert make_group("dihedral:8").order == 8
    assert make_group("q8").order == 8
    assert make_group("sym:4").order == 24
    assert make_group("alt:5").order == 60
    assert make_group("elab:2,3").order == 8
    assert make_group("v4").order == 4
    assert make_group("modp3:3").order == 27
    assert make_group("prod(cyclic:2,cyclic:3)").order == 6
    assert make_group("psl2(7)").order == 168


def test_psl2_orders():
    assert psl2_group(7).order == 168  # matches the published order of L_2(7)
    assert psl2_group(4).order == 60
    assert psl2_group(8).order == 504
    assert psl2_group(9).order == 360
    assert psl2_group(11).order == 660


def test_sl2_5_unique_involution():
    # Independent oracle: enumerate 2x2 matrices over GF(5) with det 1 and
    # count order-2 elements directly.
    G = sl2_group(5)
    assert G.order == 120
    involutions = [g for g in range(G.order) if G.order_of(g) == 2]
    assert len(involutions) == 1


def test_group_axioms_validate():
    for spec in ["cyclic:12", "dihedral:12", "q8", "sym:4", "modp3:3", "elab:3,2", "psl2:5"]:
        make_group(spec).validate()


def test_bad_cayley_table_rejected():
    with pytest.raises(SpecError):
        cayley_table_group([[0, 1], [1, 1]])
    # valid C2 table
    G = cayley_table_group([[0, 1], [1, 0]])
    assert G.order == 2


def test_element_order_examples():
    C6 = cyclic_group(6)
    assert element_order(C6, 1) == 6  # generator of C6
    Q8 = generalized_quaternion_group(8)
    assert sum(1 for g in range(8) if Q8.order_of(g) == 4) == 6
    L11 = psl2_group(11)
    assert max(L11.order_of(g) for g in range(L11.order)) == 11


def test_orders_and_cyclic_invariants():
    for spec in ["cyclic:12", "dihedral:10", "q8", "sym:4"]:
        G = make_group(spec)
        for g in range(G.order):
            cyc = G.cyclic_set(g)
            assert len(cyc) == G.order_of(g)
            assert G.order % len(cyc) == 0  # Lagrange
            assert all(G.mul(a, b) in cyc for a in cyc for b in cyc)
            assert all(G.inv(a) in cyc for a in cyc)
        assert G.order_of(G.identity) == 1


def test_generated_closure_examples():
    S4 = symmetric_group(4)
    t = S4.index_of((1, 0, 2, 3))  # transposition (12)
    c = S4.index_of((1, 2, 3, 0))  # 4-cycle (1234)
    assert generated_closure(S4, [t, c]) is TOP
    assert len(brute_closure(S4, [t, c])) == 24

    C6 = cyclic_group(6)
    sub = generated_closure(C6, [2])
    assert sub is not TOP and len(sub) == 3

    a = S4.index_of((1, 0, 3, 2))  # (12)(34)
    b = S4.index_of((2, 3, 0, 1))  # (13)(24)
    klein = generated_closure(S4, [a, b])
    assert len(klein) == 4


def test_closure_with_and_without_early_exit_agree():
    for spec in ["sym:4", "dihedral:12", "q8", "cyclic:15"]:
        G = make_group(spec)
        for x, y in itertools.product(range(G.order), repeat=2):
            fast = generates_whole(G, x, y)
            slow = len(brute_closure(G, [x, y])) == G.order
            assert fast == slow


def test_generates_whole_examples():
    S4 = symmetric_group(4)
    assert generates_whole(S4, S4.index_of((1, 0, 2, 3)), S4.index_of((1, 2, 3, 0)))
    C6 = cyclic_group(6)
    assert generates_whole(C6, C6.identity, 1)  # <1,g> = <g> = C6
    assert not generates_whole(C6, C6.identity, 2)
    Q8 = generalized_quaternion_group(8)
    # oracle: some pairs do generate Q8, e.g. two of the order-4 generators
    results = {
        (x, y): len(brute_closure(Q8, [x, y])) == 8
        for x in range(8)
        for y in range(8)
    }
    assert any(results.values())
    for (x, y), expect in results.items():
        assert generates_whole(Q8, x, y) == expect


def test_generation_invariant_under_cyclic_class():
    for spec in ["sym:4", "dihedral:12", "cyclic:20"]:
        G = make_group(spec)
        classes = cyclic_classes(G)
        for cls in classes:
            rep = cls[0]
            for x in cls[1:]:
                for y in range(G.order):
                    assert generates_whole(G, rep, y) == generates_whole(G, x, y)


def test_center_and_centralizer():
    D8 = dihedral_group(8)
    assert len(center(D8)) == 2
    L7 = psl2_group(7)
    assert len(center(L7)) == 1  # simple group: exhaustive check below on sample
    S3 = symmetric_group(3)
    rho = S3.index_of((1, 2, 0))
    assert len(centralizer(S3, rho)) == 3
    # brute-force cross-check
    brute = {h for h in range(6) if S3.mul(h, rho) == S3.mul(rho, h)}
    assert centralizer(S3, rho).members == brute


def test_center_brute_force_agreement():
    for spec in ["dihedral:12", "q8", "sym:4", "modp3:3", "cyclic:9"]:
        G = make_group(spec)
        brute = {
            z for z in range(G.order) if all(G.mul(z, g) == G.mul(g, z) for g in range(G.order))
        }
        assert center(G).members == brute


def test_series_examples():
    D8 = dihedral_group(8)
    upper = series(SubgroupHandle(D8, frozenset(range(8))), "upper_central")
    assert [len(h) for h in upper] == [1, 2, 8]

    S3 = symmetric_group(3)
    derived = series(SubgroupHandle(S3, frozenset(range(6))), "derived")
    assert [len(h) for h in derived] == [6, 3, 1]

    C12 = cyclic_group(12)
    derived = series(SubgroupHandle(C12, frozenset(range(12))), "derived")
    assert [len(h) for h in derived] == [12, 1]


def test_subgroup_is_examples():
    S3 = symmetric_group(3)
    whole = SubgroupHandle(S3, frozenset(range(6)))
    assert not subgroup_is(whole, "nilpotent")
    assert subgroup_is(whole, "solvable")

    Q8 = generalized_quaternion_group(8)
    assert subgroup_is(SubgroupHandle(Q8, frozenset(range(8))), "nilpotent")

    A5 = alternating_group(5)
    assert not subgroup_is(SubgroupHandle(A5, frozenset(range(60))), "solvable")

    C6 = cyclic_group(6)
    assert subgroup_is(SubgroupHandle(C6, frozenset(range(6))), "cyclic")
    assert subgroup_is(SubgroupHandle(C6, frozenset(range(6))), "abelian")
    V4 = elementary_abelian_group(2, 2)
    assert not subgroup_is(SubgroupHandle(V4, frozenset(range(4))), "cyclic")


def test_nilpotent_matches_sylow_normality():
    # oracle: a finite group is nilpotent iff for each prime p the number of
    # p-elements equals the p-part of the order (unique Sylow p-subgroup).
    from grouptrix.arith import factorize

    for spec in ["sym:3", "sym:4", "q8", "dihedral:12", "cyclic:36", "modp3:3", "alt:4", "prod(q8,cyclic:3)"]:
        G = make_group(spec)
        whole = SubgroupHandle(G, frozenset(range(G.order)))
        primes = set(factorize(G.order)) if G.order > 1 else set()
        unique_sylow = True
        for p in primes:
            ppart = 1
            n = G.order
            while n % p == 0:
                ppart *= p
                n //= p
            count = sum(1 for g in range(G.order) if G.order_of(g) in _ppowers(p, ppart))
            if count != ppart:
                unique_sylow = False
        assert subgroup_is(whole, "nilpotent") == unique_sylow


def _ppowers(p, ppart):
    out = set()
    v = 1
    while v <= ppart:
        out.add(v)
        v *= p
    return out


def test_engel_related():
    S3 = symmetric_group(3)
    e = S3.identity
    for y in range(6):
        assert engel_related(S3, e, y) == (True, 1)
    C6 = cyclic_group(6)
    assert engel_related(C6, 2, 3) == (True, 1)
    rho = S3.index_of((1, 2, 0))
    tau = S3.index_of((1, 0, 2))
    ok, _ = engel_related(S3, rho, tau)
    ok2, _ = engel_related(S3, tau, rho)
    # direct iteration oracle: [rho,_k tau] cycles without hitting 1,
    # while [tau,_k rho] reaches 1
    assert (ok, ok2) == (False, True)


def test_quotient_examples():
    D8 = dihedral_group(8)
    q = quotient(D8, center(D8))
    assert q.order == 4
    assert all(q.order_of(g) in (1, 2) for g in range(4))  # exponent 2

    C6 = cyclic_group(6)
    triv = quotient(C6, SubgroupHandle(C6, frozenset({0})))
    assert triv.order == 6
    assert sorted(triv.order_of(g) for g in range(6)) == sorted(C6.order_of(g) for g in range(6))

    S4 = symmetric_group(4)
    v4 = {S4.identity, S4.index_of((1, 0, 3, 2)), S4.index_of((2, 3, 0, 1)), S4.index_of((3, 2, 1, 0))}
    q2 = quotient(S4, SubgroupHandle(S4, frozenset(v4)))
    assert q2.order == 6
    assert any(q2.mul(a, b) != q2.mul(b, a) for a in range(6) for b in range(6))  # S3-like

    with pytest.raises(NotNormalError):
        sub = generated_closure(S4, [S4.index_of((1, 0, 2, 3))], early_exit=False)
        quotient(S4, sub)


def test_cyclic_classes_counts():
    A5 = alternating_group(5)
    assert len(cyclic_classes(A5)) == 32  # published value for A_5
    L7 = psl2_group(7)
    assert len(cyclic_classes(L7)) == 79  # published value for L_2(7)
    C7 = cyclic_group(7)
    assert len(cyclic_classes(C7)) == 2


def test_permutation_parsing_and_group():
    p = parse_permutation_line("(1,2)(3,4)")
    assert p == (1, 0, 3, 2)
    QT = permutation_group([parse_permutation_line("(1,2,3)"), parse_permutation_line("(1,2)")], label="S3")
    assert QT.order == 6
    with pytest.raises(SpecError):
        parse_permutation_line("(1,1)")


def test_modular_p3_structure():
    P = modular_p3_group(3)
    assert P.order == 27
    assert max(P.order_of(g) for g in range(27)) == 9  # exponent p^2
    assert any(P.mul(a, b) != P.mul(b, a) for a in range(27) for b in range(27))
    a = P.index_of((1, 0))
    b = P.index_of((0, 1))
    # defining relation: [a,b] = a^p
    assert P.commutator(b, a) in (P.index_of((3, 0)), P.index_of((6, 0)))


def test_direct_product_row_major():
    A = cyclic_group(2)
    B = cyclic_group(3)
    G = direct_product(A, B)
    for x in range(6):
        for y in range(6):
            a1, b1 = divmod(x, 3)
            a2, b2 = divmod(y, 3)
            assert G.mul(x, y) == ((a1 + a2) % 2) * 3 + (b1 + b2) % 3
