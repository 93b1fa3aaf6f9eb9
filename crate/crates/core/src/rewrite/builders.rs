//! Formula gadgets shared by the dialect translations.
//!
//! Everything here is plain AST construction: small reusable MSO snippets
//! (infinitude, consecutiveness, run structure) and the large gadgets
//! expressing unbounded dimension of an encoded vector sequence in terms
//! of the W predicate alone.

use crate::formula::{Formula, FreshNames, ULT_CONST_DIM};

use Formula as F;

pub(crate) fn leq(x: &str, y: &str) -> Formula {
    F::or(F::less(x, y), F::Equal(x.into(), y.into()))
}

/// X has members beyond every position.
pub(crate) fn infinite(set: &str, fresh: &mut FreshNames) -> Formula {
    let p = fresh.fresh1("p");
    let q = fresh.fresh1("q");
    F::all1(
        p.clone(),
        F::ex1(
            q.clone(),
            F::and(F::less(&p, &q), F::member(&q, set)),
        ),
    )
}

pub(crate) fn disjoint(a: &str, b: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    F::all1(
        z.clone(),
        F::not(F::and(F::member(&z, a), F::member(&z, b))),
    )
}

pub(crate) fn subset(a: &str, b: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    F::all1(z.clone(), F::implies(F::member(&z, a), F::member(&z, b)))
}

/// r and s are consecutive members of `set` (r < s, nothing between).
pub(crate) fn consecutive_in(set: &str, r: &str, s: &str, fresh: &mut FreshNames) -> Formula {
    let m = fresh.fresh1("m");
    F::conj(vec![
        F::member(r, set),
        F::member(s, set),
        F::less(r, s),
        F::not(F::ex1(
            m.clone(),
            F::conj(vec![F::member(&m, set), F::less(r, &m), F::less(&m, s)]),
        )),
    ])
}

/// X is finite: empty or with a greatest element.
pub(crate) fn finite_set(set: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    let m = fresh.fresh1("m");
    let z2 = fresh.fresh1("z");
    F::or(
        F::all1(z.clone(), F::not(F::member(&z, set))),
        F::ex1(
            m.clone(),
            F::and(
                F::member(&m, set),
                F::all1(
                    z2.clone(),
                    F::implies(F::member(&z2, set), leq(&z2, &m)),
                ),
            ),
        ),
    )
}

/// C is the complement of X.
pub(crate) fn complement_def(c: &str, x: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    F::all1(
        z.clone(),
        F::iff(F::member(&z, c), F::not(F::member(&z, x))),
    )
}

/// no member of `set` lies strictly between p and q (in either order).
fn no_between(set: &str, p: &str, q: &str, fresh: &mut FreshNames) -> Formula {
    let m = fresh.fresh1("m");
    F::not(F::ex1(
        m.clone(),
        F::and(
            F::member(&m, set),
            F::or(
                F::and(F::less(p, &m), F::less(&m, q)),
                F::and(F::less(q, &m), F::less(&m, p)),
            ),
        ),
    ))
}

/// I0 = I ∖ R.
pub(crate) fn difference_def(i0: &str, i: &str, r: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    F::all1(
        z.clone(),
        F::iff(
            F::member(&z, i0),
            F::and(F::member(&z, i), F::not(F::member(&z, r))),
        ),
    )
}

/// I1 is I0 with every even member dropped when it has an I0-neighbour at
/// distance one. Parity is carried by an existential set containing the
/// first position and alternating along successors.
pub(crate) fn isolation_def(i0: &str, i1: &str, fresh: &mut FreshNames) -> Formula {
    let e = fresh.fresh2("E");
    let z0 = fresh.fresh1("z");
    let p0 = fresh.fresh1("p");
    let x = fresh.fresh1("x");
    let y = fresh.fresh1("y");
    let z = fresh.fresh1("z");
    let u = fresh.fresh1("u");
    let v = fresh.fresh1("v");
    let zero_in_e = F::ex1(
        z0.clone(),
        F::and(
            F::not(F::ex1(p0.clone(), F::less(&p0, &z0))),
            F::member(&z0, &e),
        ),
    );
    let alternating = F::all1(
        x.clone(),
        F::all1(
            y.clone(),
            F::implies(
                F::Succ(x.clone(), y.clone()),
                F::iff(F::member(&x, &e), F::not(F::member(&y, &e))),
            ),
        ),
    );
    let has_neighbour = F::or(
        F::ex1(
            u.clone(),
            F::and(F::Succ(z.clone(), u.clone()), F::member(&u, i0)),
        ),
        F::ex1(
            v.clone(),
            F::and(F::Succ(v.clone(), z.clone()), F::member(&v, i0)),
        ),
    );
    let membership = F::all1(
        z.clone(),
        F::iff(
            F::member(&z, i1),
            F::and(
                F::member(&z, i0),
                F::not(F::and(F::member(&z, &e), has_neighbour)),
            ),
        ),
    );
    F::ex2(e, F::conj(vec![zero_in_e, alternating, membership]))
}

/// J is the completion of I relative to R: between consecutive members of
/// I with no R-member in between, every position except the last one
/// before the right endpoint is added.
pub(crate) fn completion_def(r: &str, i: &str, j: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    let x = fresh.fresh1("x");
    let y = fresh.fresh1("y");
    let m1 = fresh.fresh1("m");
    let m2 = fresh.fresh1("m");
    let filled = F::ex1(
        x.clone(),
        F::ex1(
            y.clone(),
            F::conj(vec![
                F::member(&x, i),
                F::member(&y, i),
                F::less(&x, &z),
                F::less(&z, &y),
                F::not(F::ex1(
                    m1.clone(),
                    F::conj(vec![F::member(&m1, i), F::less(&x, &m1), F::less(&m1, &y)]),
                )),
                F::not(F::ex1(
                    m2.clone(),
                    F::conj(vec![F::member(&m2, r), F::less(&x, &m2), F::less(&m2, &y)]),
                )),
                F::not(F::Succ(z.clone(), y.clone())),
            ]),
        ),
    );
    F::all1(
        z.clone(),
        F::iff(F::member(&z, j), F::or(F::member(&z, i), filled)),
    )
}

/// Simulation of a sub-extraction of ⟨R,J⟩ through subsets: rp ⊆ R marks
/// the kept gap boundaries, ip ⊆ J keeps full original intervals, each
/// rp-gap draws from a single original gap and keeps at least one
/// interval.
pub(crate) fn subextraction_guards(
    r: &str,
    j: &str,
    rp: &str,
    ip: &str,
    fresh: &mut FreshNames,
) -> Formula {
    let mut parts = vec![
        subset(rp, r, fresh),
        infinite(rp, fresh),
        subset(ip, j, fresh),
        run_closure(j, ip, fresh),
    ];
    // positions of ip within one rp-gap lie within one original gap
    {
        let p = fresh.fresh1("p");
        let q = fresh.fresh1("q");
        let inner = F::implies(
            F::conj(vec![
                F::member(&p, ip),
                F::member(&q, ip),
                F::less(&p, &q),
                no_between(rp, &p, &q, fresh),
            ]),
            no_between(r, &p, &q, fresh),
        );
        parts.push(F::all1(p.clone(), F::all1(q.clone(), inner)));
    }
    parts.push(nonempty_gaps(rp, ip, fresh));
    F::conj(parts)
}

/// Members of `sub` within `base` come and go only as whole runs of
/// consecutive `base` members.
pub(crate) fn run_closure(base: &str, sub: &str, fresh: &mut FreshNames) -> Formula {
    let x = fresh.fresh1("x");
    let y = fresh.fresh1("y");
    F::all1(
        x.clone(),
        F::all1(
            y.clone(),
            F::implies(
                F::conj(vec![
                    F::Succ(x.clone(), y.clone()),
                    F::member(&x, base),
                    F::member(&y, base),
                ]),
                F::iff(F::member(&x, sub), F::member(&y, sub)),
            ),
        ),
    )
}

/// Every gap between consecutive members of `sep` contains a member of
/// `content`.
pub(crate) fn nonempty_gaps(sep: &str, content: &str, fresh: &mut FreshNames) -> Formula {
    let r = fresh.fresh1("r");
    let s = fresh.fresh1("s");
    let z = fresh.fresh1("z");
    let cons = consecutive_in(sep, &r, &s, fresh);
    F::all1(
        r.clone(),
        F::all1(
            s.clone(),
            F::implies(
                cons,
                F::ex1(
                    z.clone(),
                    F::conj(vec![F::member(&z, content), F::less(&r, &z), F::less(&z, &s)]),
                ),
            ),
        ),
    )
}

/// The kept intervals are consecutive original intervals: no dropped
/// J-interval sits between two kept ones inside a gap.
fn interval_closed_guard(j: &str, rp: &str, ip: &str, fresh: &mut FreshNames) -> Formula {
    let p = fresh.fresh1("p");
    let z = fresh.fresh1("z");
    let q = fresh.fresh1("q");
    F::not(F::ex1(
        p.clone(),
        F::ex1(
            z.clone(),
            F::ex1(
                q.clone(),
                F::conj(vec![
                    F::member(&p, ip),
                    F::member(&q, ip),
                    F::member(&z, j),
                    F::not(F::member(&z, ip)),
                    F::less(&p, &z),
                    F::less(&z, &q),
                    no_between(rp, &p, &q, fresh),
                ]),
            ),
        ),
    ))
}

/// X contains rp and every position with no ip-member at distance ≤ 1.
pub(crate) fn adjacency_def(x: &str, rp: &str, ip: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    let u = fresh.fresh1("u");
    let v = fresh.fresh1("v");
    let near = F::disj(vec![
        F::member(&z, ip),
        F::ex1(
            u.clone(),
            F::and(F::Succ(z.clone(), u.clone()), F::member(&u, ip)),
        ),
        F::ex1(
            v.clone(),
            F::and(F::Succ(v.clone(), z.clone()), F::member(&v, ip)),
        ),
    ]);
    F::all1(
        z.clone(),
        F::iff(
            F::member(&z, x),
            F::or(F::member(&z, rp), F::not(near)),
        ),
    )
}

/// The encoded vector sequence tends to infinity: every infinite set with
/// bounded gaps ultimately meets each I-interval at least twice.
fn tends_to_infinity_def(i: &str, fresh: &mut FreshNames) -> Formula {
    let y = fresh.fresh2("Y");
    let n = fresh.fresh1("n");
    let p = fresh.fresh1("p");
    let a = fresh.fresh1("a");
    let b = fresh.fresh1("b");
    let run_start = {
        let q = fresh.fresh1("q");
        F::and(
            F::member(&p, i),
            F::not(F::ex1(
                q.clone(),
                F::and(F::Succ(q.clone(), p.clone()), F::member(&q, i)),
            )),
        )
    };
    let in_run = |target: &str, fresh: &mut FreshNames| {
        let w = fresh.fresh1("w");
        F::and(
            leq(&p, target),
            F::all1(
                w.clone(),
                F::implies(
                    F::and(leq(&p, &w), leq(&w, target)),
                    F::member(&w, i),
                ),
            ),
        )
    };
    let a_in = in_run(&a, fresh);
    let b_in = in_run(&b, fresh);
    let two_members = F::ex1(
        a.clone(),
        F::ex1(
            b.clone(),
            F::conj(vec![
                F::member(&a, &y),
                F::member(&b, &y),
                F::less(&a, &b),
                a_in,
                b_in,
            ]),
        ),
    );
    let ultimately = F::ex1(
        n.clone(),
        F::all1(
            p.clone(),
            F::implies(F::and(run_start, F::less(&n, &p)), two_members),
        ),
    );
    let inf = infinite(&y, fresh);
    F::all2(
        y.clone(),
        F::implies(F::and(inf, F::not(F::W(y.clone()))), ultimately),
    )
}

/// γ = ⟨S,J⟩ is a sub-sequence of ⟨R,I⟩ kept in full: S ⊆ R, J ⊆ I, the
/// J-positions of each S-gap come from one original gap and take all of
/// its I-positions.
fn subsequence_guards(r: &str, i: &str, s: &str, j: &str, fresh: &mut FreshNames) -> Formula {
    let mut parts = vec![subset(s, r, fresh), infinite(s, fresh), subset(j, i, fresh)];
    {
        let p = fresh.fresh1("p");
        let q = fresh.fresh1("q");
        let inner = F::implies(
            F::conj(vec![
                F::member(&p, j),
                F::member(&q, j),
                F::less(&p, &q),
                no_between(s, &p, &q, fresh),
            ]),
            no_between(r, &p, &q, fresh),
        );
        parts.push(F::all1(p.clone(), F::all1(q.clone(), inner)));
    }
    {
        // fullness: an I-position sharing the original gap of a kept
        // J-position is kept as well
        let p = fresh.fresh1("p");
        let q = fresh.fresh1("q");
        let inner = F::implies(
            F::conj(vec![
                F::member(&p, j),
                F::member(&q, i),
                no_between(r, &p, &q, fresh),
            ]),
            F::member(&q, j),
        );
        parts.push(F::all1(p.clone(), F::all1(q.clone(), inner)));
    }
    parts.push(nonempty_gaps(s, j, fresh));
    F::conj(parts)
}

/// β = ⟨S,Jb⟩ is a strict extraction of γ = ⟨S,J⟩: whole runs are kept or
/// dropped, with at least one kept and one dropped per gap.
fn strict_extraction_guards(s: &str, j: &str, jb: &str, fresh: &mut FreshNames) -> Formula {
    let kept_and_dropped = {
        let r = fresh.fresh1("r");
        let t = fresh.fresh1("t");
        let z = fresh.fresh1("z");
        let u = fresh.fresh1("u");
        let cons = consecutive_in(s, &r, &t, fresh);
        F::all1(
            r.clone(),
            F::all1(
                t.clone(),
                F::implies(
                    cons,
                    F::and(
                        F::ex1(
                            z.clone(),
                            F::conj(vec![
                                F::member(&z, jb),
                                F::less(&r, &z),
                                F::less(&z, &t),
                            ]),
                        ),
                        F::ex1(
                            u.clone(),
                            F::conj(vec![
                                F::member(&u, j),
                                F::not(F::member(&u, jb)),
                                F::less(&r, &u),
                                F::less(&u, &t),
                            ]),
                        ),
                    ),
                ),
            ),
        )
    };
    F::conj(vec![subset(jb, j, fresh), run_closure(j, jb, fresh), kept_and_dropped])
}

/// γ′ ≤ γ: dominated sequences arise by deleting rightmost positions of
/// each interval while keeping its start.
fn domination_sim(j: &str, j1: &str, fresh: &mut FreshNames) -> Formula {
    let x = fresh.fresh1("x");
    let y = fresh.fresh1("y");
    let p = fresh.fresh1("p");
    let q = fresh.fresh1("q");
    let prefix_closed = F::all1(
        x.clone(),
        F::all1(
            y.clone(),
            F::implies(
                F::conj(vec![
                    F::Succ(x.clone(), y.clone()),
                    F::member(&x, j),
                    F::member(&y, j1),
                ]),
                F::member(&x, j1),
            ),
        ),
    );
    let starts_kept = F::all1(
        p.clone(),
        F::implies(
            F::and(
                F::member(&p, j),
                F::not(F::ex1(
                    q.clone(),
                    F::and(F::Succ(q.clone(), p.clone()), F::member(&q, j)),
                )),
            ),
            F::member(&p, j1),
        ),
    );
    F::conj(vec![subset(j1, j, fresh), prefix_closed, starts_kept])
}

/// ⟨S,K⟩ is a 1-extraction of ⟨S,J1⟩: exactly one full J1-interval per
/// S-gap.
fn one_extraction_guards(s: &str, j1: &str, k: &str, fresh: &mut FreshNames) -> Formula {
    let single_run = {
        let p = fresh.fresh1("p");
        let z = fresh.fresh1("z");
        let q = fresh.fresh1("q");
        F::not(F::ex1(
            p.clone(),
            F::ex1(
                z.clone(),
                F::ex1(
                    q.clone(),
                    F::conj(vec![
                        F::member(&p, k),
                        F::member(&q, k),
                        F::not(F::member(&z, k)),
                        F::less(&p, &z),
                        F::less(&z, &q),
                        no_between(s, &p, &q, fresh),
                    ]),
                ),
            ),
        ))
    };
    F::conj(vec![
        subset(k, j1, fresh),
        run_closure(j1, k, fresh),
        single_run,
        nonempty_gaps(s, k, fresh),
    ])
}

/// U is the union of the K-intervals lying in gaps that directly follow a
/// selected separator.
fn selection_def(u: &str, s0: &str, s: &str, k: &str, fresh: &mut FreshNames) -> Formula {
    let z = fresh.fresh1("z");
    let t = fresh.fresh1("t");
    let m = fresh.fresh1("m");
    let selected_gap = F::ex1(
        t.clone(),
        F::conj(vec![
            F::member(&t, s0),
            F::less(&t, &z),
            F::not(F::ex1(
                m.clone(),
                F::conj(vec![F::member(&m, s), F::less(&t, &m), F::less(&m, &z)]),
            )),
        ]),
    );
    F::all1(
        z.clone(),
        F::iff(F::member(&z, u), F::and(F::member(&z, k), selected_gap)),
    )
}

/// The number sequences ⟨S,K⟩ and ⟨S,K2⟩ are asymptotically equivalent:
/// every selection of separators leaves both restrictions bounded or both
/// unbounded, each expressed through W on the complement of the selected
/// intervals.
pub fn asym_equiv(s: &str, k: &str, k2: &str, fresh: &mut FreshNames) -> Formula {
    let s0 = fresh.fresh2("S");
    let u1 = fresh.fresh2("U");
    let u2 = fresh.fresh2("U");
    let c1 = fresh.fresh2("C");
    let c2 = fresh.fresh2("C");
    let body = F::ex2(
        u1.clone(),
        F::ex2(
            u2.clone(),
            F::ex2(
                c1.clone(),
                F::ex2(
                    c2.clone(),
                    F::conj(vec![
                        selection_def(&u1, &s0, s, k, fresh),
                        selection_def(&u2, &s0, s, k2, fresh),
                        complement_def(&c1, &u1, fresh),
                        complement_def(&c2, &u2, fresh),
                        F::iff(F::W(c1.clone()), F::W(c2.clone())),
                    ]),
                ),
            ),
        ),
    );
    let sub = subset(&s0, s, fresh);
    F::all2(s0.clone(), F::implies(sub, body))
}

/// ⟨R,I⟩ is defined, tends to infinity, and has unbounded dimension:
/// some fully-kept sub-sequence γ and strict extraction β of it satisfy
/// the dominated-mix property, checked through synchronised
/// 1-extractions and asymptotic equivalence.
pub fn ttoinf_dim_unbounded(r: &str, i: &str, fresh: &mut FreshNames) -> Formula {
    let s = fresh.fresh2("S");
    let j = fresh.fresh2("J");
    let jb = fresh.fresh2("J");
    let j1 = fresh.fresh2("J");
    let j2 = fresh.fresh2("J");
    let k = fresh.fresh2("K");
    let k2 = fresh.fresh2("K");

    let inner_mix = F::all2(
        k.clone(),
        F::implies(
            one_extraction_guards(&s, &j1, &k, fresh),
            F::ex2(
                k2.clone(),
                F::and(
                    one_extraction_guards(&s, &j2, &k2, fresh),
                    asym_equiv(&s, &k, &k2, fresh),
                ),
            ),
        ),
    );
    let dominated = F::all2(
        j1.clone(),
        F::implies(
            domination_sim(&j, &j1, fresh),
            F::ex2(
                j2.clone(),
                F::and(domination_sim(&jb, &j2, fresh), inner_mix),
            ),
        ),
    );
    let witness = F::ex2(
        s.clone(),
        F::ex2(
            j.clone(),
            F::ex2(
                jb.clone(),
                F::conj(vec![
                    subsequence_guards(r, i, &s, &j, fresh),
                    strict_extraction_guards(&s, &j, &jb, fresh),
                    dominated,
                ]),
            ),
        ),
    );
    F::conj(vec![
        infinite(r, fresh),
        disjoint(r, i, fresh),
        tends_to_infinity_def(i, fresh),
        witness,
    ])
}

/// ⟨R,I⟩ is defined and has unbounded dimension. After completing the
/// intervals, either some sub-extraction tends to infinity with unbounded
/// dimension, or some interval-closed sub-extraction has bounded
/// coordinates and unboundedly many intervals per gap.
pub fn dim_unbounded(r: &str, i: &str, fresh: &mut FreshNames) -> Formula {
    let j = fresh.fresh2("J");
    let rp1 = fresh.fresh2("R");
    let ip1 = fresh.fresh2("I");
    let rp2 = fresh.fresh2("R");
    let ip2 = fresh.fresh2("I");
    let c = fresh.fresh2("C");
    let x = fresh.fresh2("X");

    let case1 = F::ex2(
        rp1.clone(),
        F::ex2(
            ip1.clone(),
            F::and(
                subextraction_guards(r, &j, &rp1, &ip1, fresh),
                ttoinf_dim_unbounded(&rp1, &ip1, fresh),
            ),
        ),
    );
    let bounded_coords = F::ex2(
        c.clone(),
        F::and(complement_def(&c, &ip2, fresh), F::not(F::W(c.clone()))),
    );
    let unbounded_intervals = F::ex2(
        x.clone(),
        F::and(adjacency_def(&x, &rp2, &ip2, fresh), F::W(x.clone())),
    );
    let case2 = F::ex2(
        rp2.clone(),
        F::ex2(
            ip2.clone(),
            F::conj(vec![
                subextraction_guards(r, &j, &rp2, &ip2, fresh),
                interval_closed_guard(&j, &rp2, &ip2, fresh),
                bounded_coords,
                unbounded_intervals,
            ]),
        ),
    );
    F::conj(vec![
        infinite(r, fresh),
        disjoint(r, i, fresh),
        F::ex2(
            j.clone(),
            F::and(completion_def(r, i, &j, fresh), F::or(case1, case2)),
        ),
    ])
}

/// Y (a set of non-♭ positions) is ultimately periodic when ignoring the
/// ♭'s: some period-marking set R has ultimately constant dimension
/// against the ♭-positions, and every alternating re-phasing of it is
/// ultimately inside or outside Y.
pub fn up_ignoring_flats(y: &str, flat: char, fresh: &mut FreshNames) -> Formula {
    let r = fresh.fresh2("R");
    let i = fresh.fresh2("I");
    let r2 = fresh.fresh2("R");

    let i_is_flats = {
        let z = fresh.fresh1("z");
        F::all1(
            z.clone(),
            F::iff(F::member(&z, &i), F::Letter(flat, z.clone())),
        )
    };
    let alternating = {
        let rr = fresh.fresh1("r");
        let ss = fresh.fresh1("s");
        let u = fresh.fresh1("u");
        let v = fresh.fresh1("v");
        let cons = consecutive_in(&r, &rr, &ss, fresh);
        let exactly_one = F::ex1(
            u.clone(),
            F::conj(vec![
                F::member(&u, &r2),
                F::less(&rr, &u),
                F::less(&u, &ss),
                F::all1(
                    v.clone(),
                    F::implies(
                        F::conj(vec![F::member(&v, &r2), F::less(&rr, &v), F::less(&v, &ss)]),
                        F::Equal(v.clone(), u.clone()),
                    ),
                ),
            ]),
        );
        let one_per_gap = F::all1(rr.clone(), F::all1(ss.clone(), F::implies(cons, exactly_one)));
        let u2v = fresh.fresh1("u");
        let rr2 = fresh.fresh1("r");
        let ss2 = fresh.fresh1("s");
        let cons2 = consecutive_in(&r, &rr2, &ss2, fresh);
        let interior_only = F::all1(
            u2v.clone(),
            F::implies(
                F::member(&u2v, &r2),
                F::ex1(
                    rr2.clone(),
                    F::ex1(
                        ss2.clone(),
                        F::conj(vec![cons2, F::less(&rr2, &u2v), F::less(&u2v, &ss2)]),
                    ),
                ),
            ),
        );
        F::and(one_per_gap, interior_only)
    };
    let ultimately = |inside: bool, fresh: &mut FreshNames| {
        let n = fresh.fresh1("n");
        let z = fresh.fresh1("z");
        let mem = F::member(&z, y);
        let target = if inside { mem } else { F::not(mem) };
        F::ex1(
            n.clone(),
            F::all1(
                z.clone(),
                F::implies(
                    F::and(F::member(&z, &r2), F::less(&n, &z)),
                    target,
                ),
            ),
        )
    };
    let ult_in = ultimately(true, fresh);
    let ult_out = ultimately(false, fresh);
    let rephased = F::all2(
        r2.clone(),
        F::implies(
            F::conj(vec![
                infinite(&r2, fresh),
                disjoint(&r2, &i, fresh),
                alternating,
                F::Macro(ULT_CONST_DIM.into(), vec![r2.clone(), i.clone()]),
            ]),
            F::or(ult_in, ult_out),
        ),
    );
    F::ex2(
        r.clone(),
        F::ex2(
            i.clone(),
            F::conj(vec![
                i_is_flats,
                infinite(&r, fresh),
                disjoint(&r, &i, fresh),
                F::Macro(ULT_CONST_DIM.into(), vec![r.clone(), i.clone()]),
                rephased,
            ]),
        ),
    )
}
