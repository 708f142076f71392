//! Coproduct, counit, antipode, and the mechanical Hopf-axiom battery.
//!
//! The tensor product in play truncates θ-degrees: a degree-m slice from the
//! left factor times a degree-n slice from the right lands in degree m+n and
//! is dropped past the ambient order. On representation matrices that is
//! exactly the Kronecker product with θ-truncated entry products, which is
//! what [`bar_tensor`] computes.
//!
//! Axioms are verified on faithful finite-dimensional modules rather than in
//! the abstract presented algebra. Coassociativity and the counit axiom
//! become associativity/unit laws of the product-module construction; the
//! antipode axiom and relation preservation are per-generator matrix
//! identities. Failures are report entries carrying the first offending
//! matrix position.

use serde_json::{json, Value};

use crate::bitheta::BiTheta;
use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::rep::{
    build_deformed, build_two_param, exp_of_matrix, exp_of_matrix_bi, relation_checks,
    scale_by_series, theta_coeff_matrix, two_param_relation_checks, BiRepMatrix, DeformedRep,
    RepMatrix, Spin, TwoParamRep,
};
use crate::report::{check_matrix_eq, Check, VerificationReport};
use crate::ring::Ring;
use crate::theta::ThetaSeries;

/// Generators the structure maps act on. `EPlus` is the group-like
/// exponential `e(Hδ/2;θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    One,
    H,
    JPlus,
    JMinus,
    EPlus,
}

/// Degree-truncating tensor product of representation matrices: Kronecker
/// product with θ-truncated entry multiplication, left factor first.
pub fn bar_tensor(a: &RepMatrix, b: &RepMatrix) -> Result<RepMatrix> {
    let (ra, rb) = (a.at(0, 0).order(), b.at(0, 0).order());
    if ra != rb {
        return Err(AlgebraError::OrderMismatch {
            left: ra,
            right: rb,
        });
    }
    Ok(a.kron(b))
}

/// `e(±Hδ/2;θ)` on a module.
pub fn half_exp(rep: &DeformedRep, sign: i64) -> RepMatrix {
    let h0 = theta_coeff_matrix(&rep.h, 0);
    let c = rep.delta.scale(&Rational::new(sign, 2));
    exp_of_matrix(&h0, &c, rep.order)
}

/// The trivial (counit) module: everything acts as zero on a 1-dimensional
/// space, and the group-like exponential becomes 1.
pub fn trivial_module(delta: &Rational, order: usize) -> DeformedRep {
    let zero = Matrix::zero(1, &ThetaSeries::constant(Rational::zero(), order));
    DeformedRep {
        dim: 1,
        order,
        delta: delta.clone(),
        h: zero.clone(),
        j_plus: zero.clone(),
        j_minus: zero,
    }
}

/// Product module carrying the coproduct action:
/// `Δ(H) = H⊗1 + 1⊗H` and `Δ(J±) = J± ⊗̄ e(Hδ/2;θ) + e(-Hδ/2;θ) ⊗̄ J±`.
pub fn tensor_module(a: &DeformedRep, b: &DeformedRep) -> DeformedRep {
    assert_eq!(a.order, b.order, "tensor factors at different orders");
    assert_eq!(a.delta, b.delta, "tensor factors at different deltas");
    let one = |m: &DeformedRep| m.h.one_like();
    let h = a.h.kron(&one(b)) + one(a).kron(&b.h);
    let ep_b = half_exp(b, 1);
    let em_a = half_exp(a, -1);
    let j_plus = a.j_plus.kron(&ep_b) + em_a.kron(&b.j_plus);
    let j_minus = a.j_minus.kron(&ep_b) + em_a.kron(&b.j_minus);
    DeformedRep {
        dim: a.dim * b.dim,
        order: a.order,
        delta: a.delta.clone(),
        h,
        j_plus,
        j_minus,
    }
}

/// Coproduct of a generator evaluated on the spin pair `(j1, j2)`.
pub fn coproduct(gen: Gen, j1: Spin, j2: Spin, delta: &Rational, order: usize) -> RepMatrix {
    let m1 = build_deformed(j1, delta, order);
    let m2 = build_deformed(j2, delta, order);
    let t = tensor_module(&m1, &m2);
    match gen {
        Gen::One => t.h.one_like(),
        Gen::H => t.h,
        Gen::JPlus => t.j_plus,
        Gen::JMinus => t.j_minus,
        Gen::EPlus => half_exp(&t, 1),
    }
}

/// Counit values: 1 on the unit and the group-like, 0 on H and J±.
pub fn counit(gen: Gen, order: usize) -> ThetaSeries<Rational> {
    match gen {
        Gen::One | Gen::EPlus => ThetaSeries::constant(Rational::one(), order),
        Gen::H | Gen::JPlus | Gen::JMinus => ThetaSeries::constant(Rational::zero(), order),
    }
}

/// Antipode on generators: `S(H) = -H`, `S(J±) = -e(±δ;θ)J±`, `S(1) = 1`,
/// and `S(e(Hδ/2;θ)) = e(-Hδ/2;θ)`; extended to products as an
/// antihomomorphism.
pub fn antipode(gen: Gen, j: Spin, delta: &Rational, order: usize) -> RepMatrix {
    let m = build_deformed(j, delta, order);
    match gen {
        Gen::One => m.h.one_like(),
        Gen::H => -m.h,
        Gen::JPlus => -scale_by_series(&m.j_plus, &ThetaSeries::exp(delta, order)),
        Gen::JMinus => -scale_by_series(&m.j_minus, &ThetaSeries::exp(&-delta.clone(), order)),
        Gen::EPlus => half_exp(&m, -1),
    }
}

/// Permutation matrix swapping the two tensor factors of a d·d product space.
fn swap_operator(d: usize, order: usize) -> RepMatrix {
    let zero = ThetaSeries::constant(Rational::zero(), order);
    let one = ThetaSeries::constant(Rational::one(), order);
    Matrix::from_fn(d * d, |row, col| {
        let (i, k) = (row / d, row % d);
        let (i2, k2) = (col / d, col % d);
        if i == k2 && k == i2 {
            one.clone()
        } else {
            zero.clone()
        }
    })
}

fn grid_params(j: Spin, delta: &Rational, order: usize) -> Value {
    json!({ "j": j.to_string(), "delta": delta.to_string(), "r": order })
}

/// Runs the full single-variable axiom battery on spin-j modules:
/// coassociativity, the counit axiom, the antipode axiom, relation
/// preservation of Δ / ε / S, group-likeness of the exponential, the
/// cocommutativity pattern (cocommutative exactly in the classical
/// degeneration), and the antipode-square conjugation identity.
pub fn check_hopf_axioms(j: Spin, delta: &Rational, order: usize) -> VerificationReport {
    let params = grid_params(j, delta, order);
    let m = build_deformed(j, delta, order);
    let mut report = VerificationReport::new();

    // (a) coassociativity: both ways of tripling the module agree
    let left = tensor_module(&tensor_module(&m, &m), &m);
    let right = tensor_module(&m, &tensor_module(&m, &m));
    for (tag, l, r) in [
        ("h", &left.h, &right.h),
        ("jplus", &left.j_plus, &right.j_plus),
        ("jminus", &left.j_minus, &right.j_minus),
    ] {
        report.push(check_matrix_eq(
            format!("coassociativity_{tag}"),
            params.clone(),
            l,
            r,
        ));
    }

    // (b) counit axiom: tensoring with the trivial module is the identity
    let trivial = trivial_module(delta, order);
    let from_left = tensor_module(&trivial, &m);
    let from_right = tensor_module(&m, &trivial);
    for (tag, got_l, got_r, want) in [
        ("h", &from_left.h, &from_right.h, &m.h),
        ("jplus", &from_left.j_plus, &from_right.j_plus, &m.j_plus),
        (
            "jminus",
            &from_left.j_minus,
            &from_right.j_minus,
            &m.j_minus,
        ),
    ] {
        report.push(check_matrix_eq(
            format!("counit_left_{tag}"),
            params.clone(),
            got_l,
            want,
        ));
        report.push(check_matrix_eq(
            format!("counit_right_{tag}"),
            params.clone(),
            got_r,
            want,
        ));
    }

    // (c) antipode axiom m(id ⊗̄ S)Δ = m(S ⊗̄ id)Δ = ι∘ε on each generator
    let s_h = antipode(Gen::H, j, delta, order);
    let s_jp = antipode(Gen::JPlus, j, delta, order);
    let s_jm = antipode(Gen::JMinus, j, delta, order);
    let ep = half_exp(&m, 1);
    let em = half_exp(&m, -1);
    let s_ep = antipode(Gen::EPlus, j, delta, order);
    let zero = m.h.zero_like();
    let id = m.h.one_like();
    // Δ(H) = H⊗1 + 1⊗H
    report.push(check_matrix_eq(
        "antipode_left_h",
        params.clone(),
        &(s_h.clone() + m.h.clone()),
        &zero,
    ));
    report.push(check_matrix_eq(
        "antipode_right_h",
        params.clone(),
        &(m.h.clone() + s_h.clone()),
        &zero,
    ));
    // Δ(J±) = J± ⊗̄ E+ + E- ⊗̄ J±, with S(E+) = E- and S(E-) = E+
    for (tag, jg, s_jg) in [("jplus", &m.j_plus, &s_jp), ("jminus", &m.j_minus, &s_jm)] {
        let m_id_s = jg.clone() * s_ep.clone() + em.clone() * s_jg.clone();
        let m_s_id = s_jg.clone() * ep.clone() + ep.clone() * jg.clone();
        report.push(check_matrix_eq(
            format!("antipode_left_{tag}"),
            params.clone(),
            &m_s_id,
            &zero,
        ));
        report.push(check_matrix_eq(
            format!("antipode_right_{tag}"),
            params.clone(),
            &m_id_s,
            &zero,
        ));
    }
    // Δ(E+) = E+ ⊗̄ E+, ε(E+) = 1
    report.push(check_matrix_eq(
        "antipode_left_group_like",
        params.clone(),
        &(s_ep.clone() * ep.clone()),
        &id,
    ));
    report.push(check_matrix_eq(
        "antipode_right_group_like",
        params.clone(),
        &(ep.clone() * s_ep.clone()),
        &id,
    ));

    // (d) Δ is an algebra map: the coproduct images satisfy the defining
    // relations on the product module
    let t = tensor_module(&m, &m);
    for c in relation_checks(
        &t.h,
        &t.j_plus,
        &t.j_minus,
        delta,
        order,
        &params,
        "coproduct_",
    ) {
        report.push(c);
    }

    // (e) ε is a homomorphism: the relations hold on the trivial module
    for c in relation_checks(
        &trivial.h,
        &trivial.j_plus,
        &trivial.j_minus,
        delta,
        order,
        &params,
        "counit_",
    ) {
        report.push(c);
    }

    // (e) S is an antihomomorphism: its images satisfy the transported
    // relations [S(H),S(J±)] = ∓2S(J±) and [S(J+),S(J-)]·D = N
    report.push(check_matrix_eq(
        "antipode_antihom_weight_plus",
        params.clone(),
        &s_h.commutator(&s_jp),
        &-s_jp.scale(&Rational::from_int(2)),
    ));
    report.push(check_matrix_eq(
        "antipode_antihom_weight_minus",
        params.clone(),
        &s_h.commutator(&s_jm),
        &s_jm.scale(&Rational::from_int(2)),
    ));
    {
        let denom = crate::psi::exp_diff(delta, order);
        let h0 = theta_coeff_matrix(&m.h, 0);
        let n = exp_of_matrix(&h0, delta, order) - exp_of_matrix(&h0, &-delta.clone(), order);
        let lhs = scale_by_series(&s_jp.commutator(&s_jm), &denom);
        report.push(check_matrix_eq(
            "antipode_respects_commutator",
            params.clone(),
            &lhs,
            &n,
        ));
    }

    // group-likeness: Δ(e(Hδ/2;θ)) = e(Hδ/2;θ) ⊗̄ e(Hδ/2;θ)
    let delta_ep = half_exp(&t, 1);
    let kron_ep = bar_tensor(&ep, &ep).expect("same order");
    report.push(check_matrix_eq(
        "group_like_coproduct",
        params.clone(),
        &delta_ep,
        &kron_ep,
    ));

    // cocommutativity pattern: swapping tensor factors fixes Δ exactly in
    // the classical degeneration (r = 0, δ = 0, or the trivial spin) and
    // must break otherwise
    let p = swap_operator(m.dim, order);
    let swap = |x: &RepMatrix| p.clone() * x.clone() * p.clone();
    report.push(check_matrix_eq(
        "cocommutativity_h",
        params.clone(),
        &swap(&t.h),
        &t.h,
    ));
    let classical = order == 0 || delta.is_zero() || j == Spin(0);
    for (tag, dg) in [("jplus", &t.j_plus), ("jminus", &t.j_minus)] {
        let swapped = swap(dg);
        let diff = swapped.clone() - dg.clone();
        let name = format!("cocommutativity_pattern_{tag}");
        let check = match (diff.first_nonzero(), classical) {
            (None, true) => Check::pass(name, params.clone())
                .with_note("cocommutative, matching the classical degeneration"),
            (Some((i, jj, v)), false) => Check::pass(name, params.clone()).with_note(&format!(
                "non-cocommutative as required away from the classical case; witness at ({i},{jj}): {v}"
            )),
            (None, false) => Check::fail(
                name,
                params.clone(),
                json!({ "note": "unexpectedly cocommutative at positive order" }),
            ),
            (Some((i, jj, v)), true) => Check::fail(
                name,
                params.clone(),
                json!({
                    "position": [i, jj],
                    "value": v.to_string(),
                    "note": "classical coproduct failed to be cocommutative",
                }),
            ),
        };
        report.push(check);
    }

    // computed report line: S² equals conjugation by the group-like e(Hδ;θ)
    {
        let h0 = theta_coeff_matrix(&m.h, 0);
        let e_full = exp_of_matrix(&h0, delta, order);
        let e_full_inv = exp_of_matrix(&h0, &-delta.clone(), order);
        let e2 = ThetaSeries::exp(&(delta + delta), order);
        // S²(J+) = e(δ)²·J+ = e(2δ)·J+
        let s2_jp = scale_by_series(&m.j_plus, &e2);
        let conj = e_full.clone() * m.j_plus.clone() * e_full_inv.clone();
        report.push(check_matrix_eq(
            "antipode_square_conjugation",
            params.clone(),
            &s2_jp,
            &conj,
        ));
        let s2_h = -(-m.h.clone());
        report.push(check_matrix_eq(
            "antipode_square_h",
            params.clone(),
            &s2_h,
            &m.h,
        ));
    }

    report
}

// ---------------------------------------------------------------------------
// two-parameter battery
// ---------------------------------------------------------------------------

/// `F± = e(±Hδ1/2;θ1)·e(±Hδ2/2;θ2)`, with the minus version in reversed
/// variable order as the structure maps prescribe.
pub fn bi_half_exp(rep: &TwoParamRep, sign: i64) -> BiRepMatrix {
    let (r1, r2) = rep.orders;
    let h0 = rep.h.map(|e| e.constant_term().clone());
    let half = Rational::new(sign, 2);
    let c1 = rep.deltas.0.scale(&half);
    let c2 = rep.deltas.1.scale(&half);
    let f1 = exp_of_matrix_bi(&h0, &c1, 1, r1, r2);
    let f2 = exp_of_matrix_bi(&h0, &c2, 2, r1, r2);
    if sign >= 0 {
        f1 * f2
    } else {
        f2 * f1
    }
}

fn bi_trivial(deltas: (Rational, Rational), r1: usize, r2: usize) -> TwoParamRep {
    let zero = Matrix::zero(1, &BiTheta::constant(Rational::zero(), r1, r2));
    TwoParamRep {
        dim: 1,
        orders: (r1, r2),
        deltas,
        h: zero.clone(),
        j_plus: zero.clone(),
        j_minus: zero,
    }
}

fn bi_tensor_module(a: &TwoParamRep, b: &TwoParamRep) -> TwoParamRep {
    assert_eq!(a.orders, b.orders);
    assert_eq!(a.deltas, b.deltas);
    let one = |m: &TwoParamRep| m.h.one_like();
    let h = a.h.kron(&one(b)) + one(a).kron(&b.h);
    let fp_b = bi_half_exp(b, 1);
    let fm_a = bi_half_exp(a, -1);
    let j_plus = a.j_plus.kron(&fp_b) + fm_a.kron(&b.j_plus);
    let j_minus = a.j_minus.kron(&fp_b) + fm_a.kron(&b.j_minus);
    TwoParamRep {
        dim: a.dim * b.dim,
        orders: a.orders,
        deltas: a.deltas.clone(),
        h,
        j_plus,
        j_minus,
    }
}

/// The same axiom battery over the two-variable ring, with
/// `Δ(J±) = J± ⊗̄ F+ + F- ⊗̄ J±` and the conjugation-form antipode
/// `S(J±) = -F+·J±·F-`. Outcomes are computed, never assumed: any axiom the
/// construction fails to satisfy is reported with a witness.
pub fn two_param_hopf(
    j: Spin,
    delta1: &Rational,
    delta2: &Rational,
    r1: usize,
    r2: usize,
) -> VerificationReport {
    let params = json!({
        "j": j.to_string(),
        "delta1": delta1.to_string(),
        "delta2": delta2.to_string(),
        "r1": r1,
        "r2": r2,
    });
    let m = build_two_param(j, delta1, delta2, r1, r2);
    let mut report = VerificationReport::new();

    // base defining relations, including the division-free commutator form
    report.extend(crate::rep::check_two_param_relations(
        j, delta1, delta2, r1, r2,
    ));

    // coassociativity
    let left = bi_tensor_module(&bi_tensor_module(&m, &m), &m);
    let right = bi_tensor_module(&m, &bi_tensor_module(&m, &m));
    for (tag, l, r) in [
        ("h", &left.h, &right.h),
        ("jplus", &left.j_plus, &right.j_plus),
        ("jminus", &left.j_minus, &right.j_minus),
    ] {
        report.push(check_matrix_eq(
            format!("coassociativity_{tag}"),
            params.clone(),
            l,
            r,
        ));
    }

    // counit axiom
    let trivial = bi_trivial(m.deltas.clone(), r1, r2);
    let from_left = bi_tensor_module(&trivial, &m);
    let from_right = bi_tensor_module(&m, &trivial);
    for (tag, got_l, got_r, want) in [
        ("h", &from_left.h, &from_right.h, &m.h),
        ("jplus", &from_left.j_plus, &from_right.j_plus, &m.j_plus),
        (
            "jminus",
            &from_left.j_minus,
            &from_right.j_minus,
            &m.j_minus,
        ),
    ] {
        report.push(check_matrix_eq(
            format!("counit_left_{tag}"),
            params.clone(),
            got_l,
            want,
        ));
        report.push(check_matrix_eq(
            format!("counit_right_{tag}"),
            params.clone(),
            got_r,
            want,
        ));
    }

    // antipode axiom with S(J±) = -F+·J±·F-, S(H) = -H
    let fp = bi_half_exp(&m, 1);
    let fm = bi_half_exp(&m, -1);
    let s_h = -m.h.clone();
    let s_jp = -(fp.clone() * m.j_plus.clone() * fm.clone());
    let s_jm = -(fp.clone() * m.j_minus.clone() * fm.clone());
    // S(F+) = F- and S(F-) = F+ by the antihomomorphism rule
    let zero = m.h.zero_like();
    let id = m.h.one_like();
    report.push(check_matrix_eq(
        "antipode_left_h",
        params.clone(),
        &(s_h.clone() + m.h.clone()),
        &zero,
    ));
    report.push(check_matrix_eq(
        "antipode_right_h",
        params.clone(),
        &(m.h.clone() + s_h.clone()),
        &zero,
    ));
    for (tag, jg, s_jg) in [("jplus", &m.j_plus, &s_jp), ("jminus", &m.j_minus, &s_jm)] {
        let m_id_s = jg.clone() * fm.clone() + fm.clone() * s_jg.clone();
        let m_s_id = s_jg.clone() * fp.clone() + fp.clone() * jg.clone();
        report.push(check_matrix_eq(
            format!("antipode_left_{tag}"),
            params.clone(),
            &m_s_id,
            &zero,
        ));
        report.push(check_matrix_eq(
            format!("antipode_right_{tag}"),
            params.clone(),
            &m_id_s,
            &zero,
        ));
    }
    report.push(check_matrix_eq(
        "antipode_left_group_like",
        params.clone(),
        &(fm.clone() * fp.clone()),
        &id,
    ));
    report.push(check_matrix_eq(
        "antipode_right_group_like",
        params.clone(),
        &(fp.clone() * fm.clone()),
        &id,
    ));

    // Δ is an algebra map for the two-parameter relations
    let t = bi_tensor_module(&m, &m);
    for c in two_param_relation_checks(
        &t.h,
        &t.j_plus,
        &t.j_minus,
        delta1,
        delta2,
        r1,
        r2,
        &params,
        "coproduct_",
    ) {
        report.push(c);
    }

    // group-likeness of F+
    let delta_fp = bi_half_exp(&t, 1);
    let kron_fp = fp.kron(&fp);
    report.push(check_matrix_eq(
        "group_like_coproduct",
        params.clone(),
        &delta_fp,
        &kron_fp,
    ));

    report
}

/// First entry where `τ∘Δ(J+)` differs from `Δ(J+)` on the (j, j) pair, or
/// `None` when the coproduct is cocommutative there.
pub fn cocommutativity_witness(
    j: Spin,
    delta: &Rational,
    order: usize,
) -> Option<(usize, usize, ThetaSeries<Rational>)> {
    let m = build_deformed(j, delta, order);
    let t = tensor_module(&m, &m);
    let p = swap_operator(m.dim, order);
    let swapped = p.clone() * t.j_plus.clone() * p;
    let diff = swapped - t.j_plus;
    diff.first_nonzero().map(|(i, k, v)| (i, k, v.clone()))
}

/// True when every check named the same passes in both reports; used by
/// tests comparing the (r1, 0) battery against the single-variable one.
pub fn statuses_match(a: &VerificationReport, b: &VerificationReport, names: &[&str]) -> bool {
    names.iter().all(|n| match (a.find(n), b.find(n)) {
        (Some(x), Some(y)) => x.status == y.status,
        _ => false,
    })
}
