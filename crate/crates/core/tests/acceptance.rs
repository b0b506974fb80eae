//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the checked quantities. Two checks (criterion 8, skew positive instance,
//! and criterion 12) encode expectations that are mathematically
//! unattainable over the rationals as stated; they fail with a diagnostic
//! explaining the obstruction rather than being weakened. See the test
//! comments for the detailed reasoning.

use splitalg::doubling::{
    bar_quotient, check_double_in_variety, double_dendriform, random_algebra, verify_embedding,
};
use splitalg::fdalg::fixtures::*;
use splitalg::fdalg::{
    basis_tuples, derived_dendriform, is_zero_vector, skew_bracket_identities,
    stri_from_derivation, BracketConvention, FDAlgebra, LinearOperator,
};
use splitalg::koszul::verify_koszul_tri;
use splitalg::successor::{
    generate_dendriform_identities, generate_variety_identities, phi, phi_star, Mode,
};
use splitalg::terms::{
    parse_polynomial, random_polylinear_monomial, Context, Polynomial, Signature, VarSet,
};
use splitalg::varieties::VarietyPresentation;
use splitalg::{q, qr, Q};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn associative() -> VarietyPresentation {
    VarietyPresentation::builtin("associative").unwrap()
}

fn h(vars: &[usize]) -> VarSet {
    VarSet::from_iter(vars.iter().copied())
}

#[test]
fn criterion_01_fig2_golden() {
    let sig = Signature::omega(3);
    let u = parse_polynomial("((x5 *1 (x1 *3 x3)) *2 (x2 *1 x4))", &sig).unwrap();
    let (m, _) = u.iter().next().unwrap();
    let image = phi(m, h(&[1, 2])).unwrap();
    assert_eq!(image.to_string(), "((x5 >1 (x1 <3 x3)) .2 (x2 <1 x4))");
    println!("criterion 1: PASS - phi(fig.1 monomial, {{1,2}}) = {image}");
}

#[test]
fn criterion_02_triassociative_generation() {
    let set = generate_variety_identities(&associative(), Mode::Tri).unwrap();
    assert_eq!(set.dotted.len(), 7, "seven dotted identities");

    let sig = Signature::omega3(1);
    let h13 = set
        .dotted
        .iter()
        .find(|d| d.emphasis == h(&[1, 3]))
        .unwrap();
    let expected = parse_polynomial("(x1 .1 (x2 >1 x3)) - ((x1 <1 x2) .1 x3)", &sig).unwrap();
    assert_eq!(h13.poly, expected, "emphasis {{1,3}}");

    let h123 = set
        .dotted
        .iter()
        .find(|d| d.emphasis == h(&[1, 2, 3]))
        .unwrap();
    let middle_assoc =
        parse_polynomial("(x1 .1 (x2 .1 x3)) - ((x1 .1 x2) .1 x3)", &sig).unwrap();
    assert_eq!(h123.poly, middle_assoc, "emphasis {{1,2,3}}");
    println!("criterion 2: PASS - 7 dotted identities, {{1,3}} and {{1,2,3}} as displayed");
}

#[test]
fn criterion_03_tensor_cube_verification() {
    let cube = splitalg::fdalg::triassociative_tensor_cube(&dual_numbers()).unwrap();
    assert_eq!(cube.dim(), 8);
    let set = generate_variety_identities(&associative(), Mode::Tri).unwrap();
    let labeled = set.labeled();
    assert_eq!(labeled.len(), 4 + 7);
    let report = cube.check_identities(&labeled).unwrap();
    assert!(report.passed(), "{report}");
    println!(
        "criterion 3: PASS - dim-8 triple tensor power satisfies all {} identities exactly",
        labeled.len()
    );
}

#[test]
fn criterion_04_diassociative_generation() {
    let set = generate_variety_identities(&associative(), Mode::Di).unwrap();
    let sig = Signature::omega2(1);
    let expect = |t: &str| parse_polynomial(t, &sig).unwrap();

    let zero: Vec<Polynomial> = set.zero.iter().map(|z| z.poly.clone()).collect();
    assert_eq!(
        zero,
        vec![
            expect("((x1 <1 x2) >1 x3) - ((x1 >1 x2) >1 x3)"),
            expect("(x1 <1 (x2 >1 x3)) - (x1 <1 (x2 <1 x3))"),
        ]
    );
    let dotted: Vec<Polynomial> = set.dotted.iter().map(|d| d.poly.clone()).collect();
    assert_eq!(
        dotted,
        vec![
            expect("(x1 <1 (x2 <1 x3)) - ((x1 <1 x2) <1 x3)"),
            expect("(x1 >1 (x2 <1 x3)) - ((x1 >1 x2) <1 x3)"),
            expect("(x1 >1 (x2 >1 x3)) - ((x1 >1 x2) >1 x3)"),
        ]
    );
    println!("criterion 4: PASS - diassociative system = three dotted + two zero identities");
}

#[test]
fn criterion_05_rota_baxter_oracles() {
    let poly5 = truncated_polynomial(5);
    let integ = integration_operator(5);
    assert!(poly5.check_rota_baxter(&integ, &q(0)).unwrap().passed());

    let q2 = componentwise(2);
    let proj = projection(2, &[1]);
    assert!(q2.check_rota_baxter(&proj, &q(-1)).unwrap().passed());
    let fail = q2.check_rota_baxter(&proj, &q(0)).unwrap();
    assert!(!fail.passed());
    println!(
        "criterion 5: PASS - integration weight 0 ok, projection weight -1 ok, \
         projection weight 0 fails at ({:?})",
        fail.counterexamples[0].tuple
    );
}

#[test]
fn criterion_06_rb_to_dendriform_end_to_end() {
    let v = associative();

    let tri = derived_dendriform(&componentwise(2), &projection(2, &[1]), &q(-1), true).unwrap();
    let tri_set = generate_dendriform_identities(&v, Mode::Tri).unwrap();
    let report = tri.check_identities(&tri_set.labeled()).unwrap();
    assert!(report.passed(), "{report}");

    let di = derived_dendriform(&truncated_polynomial(5), &integration_operator(5), &q(0), false)
        .unwrap();
    let di_set = generate_dendriform_identities(&v, Mode::Di).unwrap();
    let report = di.check_identities(&di_set.labeled()).unwrap();
    assert!(report.passed(), "{report}");
    println!(
        "criterion 6: PASS - derived operations satisfy the generated dendriform systems \
         ({} tri, {} di identities, zero residuals)",
        tri_set.len(),
        di_set.len()
    );
}

#[test]
fn criterion_07_rb_hat_universality() {
    let weights = [q(1), q(-1), q(2), qr(1, 3)];
    let mut checked = 0;
    for seed in 0..100u64 {
        let dim = 1 + (seed % 4) as usize;
        let a = random_algebra(seed, dim, Signature::omega3(1));
        for w in &weights {
            let dd = double_dendriform(&a, Mode::Tri, w).unwrap();
            let report = dd.algebra.check_rota_baxter(&dd.operator, w).unwrap();
            assert!(report.passed(), "seed {seed}, weight {w}: {report}");
            checked += 1;
        }
    }
    println!(
        "criterion 7: PASS - Rota-Baxter relation holds on {checked} doubles \
         (seeds 0..100, weights 1, -1, 2, 1/3), zero failures"
    );
}

struct AgreementStats {
    cases: usize,
    passes: usize,
}

fn run_agreement(
    cases: &[(String, FDAlgebra)],
    mode: Mode,
    weight: &Q,
    v: &VarietyPresentation,
) -> AgreementStats {
    let mut passes = 0;
    for (name, a) in cases {
        let (left, right) = check_double_in_variety(a, v, mode, weight).unwrap();
        assert_eq!(
            left.passed(),
            right.passed(),
            "{name}: dendriform verdict {} but doubled-variety verdict {}",
            left.passed(),
            right.passed()
        );
        if left.passed() {
            let dd = double_dendriform(a, mode, weight).unwrap();
            assert!(
                verify_embedding(&dd, a).unwrap().passed(),
                "{name}: embedding must pass on a dendriform instance"
            );
            passes += 1;
        }
    }
    AgreementStats {
        cases: cases.len(),
        passes,
    }
}

#[test]
fn criterion_08_double_embedding_equivalence_tri() {
    let v = associative();
    let mut cases: Vec<(String, FDAlgebra)> = vec![
        (
            "projection-derived".into(),
            derived_dendriform(&componentwise(2), &projection(2, &[1]), &q(-1), true).unwrap(),
        ),
        (
            "projection-derived-q3a".into(),
            derived_dendriform(&componentwise(3), &projection(3, &[1]), &q(-1), true).unwrap(),
        ),
        (
            "projection-derived-q3b".into(),
            derived_dendriform(&componentwise(3), &projection(3, &[1, 3]), &q(-1), true)
                .unwrap(),
        ),
        (
            "zero-operator".into(),
            derived_dendriform(&truncated_polynomial(3), &LinearOperator::zero(3), &q(1), true)
                .unwrap(),
        ),
        (
            "unscaled-projection".into(),
            derived_dendriform(&componentwise(2), &projection(2, &[1]), &q(-1), false).unwrap(),
        ),
    ];
    for seed in 1000..1045u64 {
        cases.push((
            format!("random-{seed}"),
            random_algebra(seed, 1 + (seed % 3) as usize, Signature::omega3(1)),
        ));
    }
    let stats = run_agreement(&cases, Mode::Tri, &q(-1), &v);
    assert!(stats.cases >= 50);
    assert!(stats.passes >= 5, "positive instances must actually pass");
    println!(
        "criterion 8 (tri): PASS - verdicts agree on {}/{} seeded inputs ({} positive)",
        stats.cases, stats.cases, stats.passes
    );
}

#[test]
fn criterion_08_double_embedding_equivalence_di() {
    let v = associative();
    let mut cases: Vec<(String, FDAlgebra)> = (2..=5)
        .map(|d| {
            (
                format!("integration-derived-{d}"),
                derived_dendriform(&truncated_polynomial(d), &integration_operator(d), &q(0), false)
                    .unwrap(),
            )
        })
        .collect();
    cases.push((
        "zero-operator".into(),
        derived_dendriform(&truncated_polynomial(4), &LinearOperator::zero(4), &q(0), false)
            .unwrap(),
    ));
    for seed in 2000..2045u64 {
        cases.push((
            format!("random-{seed}"),
            random_algebra(seed, 1 + (seed % 3) as usize, Signature::omega2(1)),
        ));
    }
    let stats = run_agreement(&cases, Mode::Di, &q(0), &v);
    assert!(stats.cases >= 50);
    assert!(stats.passes >= 5);
    println!(
        "criterion 8 (di): PASS - verdicts agree on {}/{} seeded inputs ({} positive)",
        stats.cases, stats.cases, stats.passes
    );
}

#[test]
fn criterion_08_double_embedding_equivalence_stri() {
    let v = associative();
    // Dendriform dialgebras with vanishing middle operation are genuine skew
    // dendriform instances.
    let mut cases: Vec<(String, FDAlgebra)> = (3..=5)
        .map(|d| {
            (
                format!("integration-derived-{d}-middle-zero"),
                derived_dendriform(&truncated_polynomial(d), &integration_operator(d), &q(0), false)
                    .unwrap()
                    .recontext(Context::Omega3)
                    .unwrap(),
            )
        })
        .collect();
    for seed in 3000..3047u64 {
        cases.push((
            format!("random-{seed}"),
            random_algebra(seed, 1 + (seed % 3) as usize, Signature::omega3(1)),
        ));
    }
    let stats = run_agreement(&cases, Mode::STri, &q(0), &v);
    assert!(stats.cases >= 50);
    assert!(stats.passes >= 3);
    println!(
        "criterion 8 (stri): agreement holds on {}/{} seeded inputs ({} positive)",
        stats.cases, stats.cases, stats.passes
    );

    // The stated positive instance: the skew trialgebra derived from d/de on
    // Q[e]/(e^2). Over the rationals that operator is not a derivation
    // (d(e.e) = d(0) = 0, while d(e).e + e.d(e) = 2e), so the verified
    // construction rejects it; moreover its output operations satisfy the
    // skew-trialgebra identities but not the skew *dendriform* identities,
    // so it could not serve as a positive doubling instance either way.
    // See notes in the failure message.
    match stri_from_derivation(&dual_numbers(), &d_depsilon()) {
        Ok(a) => {
            let (left, right) = check_double_in_variety(&a, &v, Mode::STri, &q(0)).unwrap();
            assert!(
                left.passed() && right.passed(),
                "criterion 8 (stri): the derivation instance is not dendriform: \
                 dendriform check {}, doubled-variety check {}",
                left,
                right
            );
        }
        Err(e) => panic!(
            "criterion 8 (stri): FAIL - the designated positive instance cannot be built: {e}. \
             d/de is a derivation of Q[e]/(e^2) only in characteristic 2; over Q the Leibniz \
             rule fails on (e, e). A genuine square-zero derivation (e.g. the inner derivation \
             ad(E12) of upper triangular 2x2 matrices) yields a skew trialgebra, but that is \
             an algebra over the skew splitting, not a skew dendriform algebra, so it is a \
             negative instance of this equivalence; the honest positive instances above are \
             dendriform dialgebras with vanishing middle operation."
        ),
    }
}

#[test]
fn criterion_09_no_some_emphasized_oracles() {
    let a = derived_dendriform(&componentwise(2), &projection(2, &[1]), &q(-1), true).unwrap();
    let dd = double_dendriform(&a, Mode::Tri, &q(-1)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut monomials = 0;
    for _ in 0..200 {
        let n = 2 + (rng.gen_range(0..3) as usize);
        let u = random_polylinear_monomial(&mut rng, n, 1, Context::Omega);
        let u_poly = Polynomial::monomial(Signature::omega(1), u.clone());
        let splits: Vec<(VarSet, Polynomial)> = VarSet::nonempty_subsets(n)
            .map(|hh| (hh, phi_star(&u, hh, Mode::Tri, 1).unwrap()))
            .collect();
        for tuple in basis_tuples(a.dim(), n) {
            let args: Vec<Vec<Q>> = tuple.iter().map(|&k| a.basis_vector(k)).collect();

            // All arguments in the first block: the value is the sum over
            // all emphasis sets of the starred splittings.
            let hat_args: Vec<Vec<Q>> = args.iter().map(|v| dd.include(v)).collect();
            let lhs = dd.algebra.evaluate(&u_poly, &hat_args).unwrap();
            let mut sum = vec![q(0); a.dim()];
            for (_, split) in &splits {
                let v = a.evaluate(split, &args).unwrap();
                for (o, x) in sum.iter_mut().zip(v) {
                    *o = &*o + &x;
                }
            }
            assert_eq!(&lhs[..a.dim()], &sum[..], "sum identity at {tuple:?} for {u}");
            assert!(is_zero_vector(&lhs[a.dim()..]));

            // Primed arguments at H: the value is the primed H-splitting.
            for (hh, split) in &splits {
                let mixed: Vec<Vec<Q>> = args
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        if hh.contains(pos + 1) {
                            dd.embed(v)
                        } else {
                            dd.include(v)
                        }
                    })
                    .collect();
                let lhs = dd.algebra.evaluate(&u_poly, &mixed).unwrap();
                let rhs = a.evaluate(split, &args).unwrap();
                assert!(is_zero_vector(&lhs[..a.dim()]));
                assert_eq!(&lhs[a.dim()..], &rhs[..], "primed identity at {tuple:?} H={hh}");
            }
        }
        monomials += 1;
    }
    println!(
        "criterion 9: PASS - both block-value identities hold exactly for {monomials} \
         random monomials of degree <= 4 (seed 99)"
    );
}

#[test]
fn criterion_10_eilenberg_double() {
    let sig = Signature::omega(1);
    let assoc = parse_polynomial("(x1 *1 (x2 *1 x3)) - ((x1 *1 x2) *1 x3)", &sig).unwrap();

    // Positive direction on the tensor-cube trialgebra.
    let cube = splitalg::fdalg::triassociative_tensor_cube(&dual_numbers()).unwrap();
    let bq = bar_quotient(&cube, Mode::Tri).unwrap();
    let report = bq
        .hat
        .check_identities(&[("assoc".to_string(), assoc.clone())])
        .unwrap();
    assert!(report.passed(), "{report}");

    // Negative control: equal nonassociative operations satisfy the zero
    // identities but break a dotted identity, and the hat algebra fails
    // associativity at the corresponding mixed tuple.
    let c = so3();
    let mut bad = FDAlgebra::new(3, Signature::omega3(1));
    for fam in [
        splitalg::terms::OpSymbol::left(1),
        splitalg::terms::OpSymbol::right(1),
        splitalg::terms::OpSymbol::middle(1),
    ] {
        for (x, y, z, v) in c.table(splitalg::terms::OpSymbol::base(1)).unwrap().iter() {
            bad.set(fam, x + 1, y + 1, z + 1, v.clone());
        }
    }
    let set = generate_variety_identities(&associative(), Mode::Tri).unwrap();
    let bad_report = bad.check_identities(&set.labeled()).unwrap();
    assert!(!bad_report.passed());
    let bq2 = bar_quotient(&bad, Mode::Tri).unwrap();
    let mut matched = 0;
    for d in &set.dotted {
        let Some(ce) = bad_report
            .counterexamples
            .iter()
            .find(|cex| cex.identity == format!("f={} H={}", d.source, d.emphasis))
        else {
            continue;
        };
        let args: Vec<Vec<Q>> = ce
            .tuple
            .iter()
            .enumerate()
            .map(|(pos, &k)| {
                let mut v = vec![q(0); bq2.hat.dim()];
                if d.emphasis.contains(pos + 1) {
                    v[bq2.bar_dim + k - 1] = q(1);
                } else {
                    for (r, row) in bq2.projection.iter().enumerate() {
                        v[r] = row[k - 1].clone();
                    }
                }
                v
            })
            .collect();
        let value = bq2.hat.evaluate(&assoc, &args).unwrap();
        assert!(
            !is_zero_vector(&value),
            "hat must fail associativity at the image of {:?}",
            ce.tuple
        );
        matched += 1;
    }
    assert!(matched >= 1);
    println!(
        "criterion 10: PASS - hat of the tensor cube is associative; corrupted input \
         fails at {matched} matching tuples"
    );
}

#[test]
fn criterion_11_koszul_dimension_chain() {
    let report = verify_koszul_tri(&associative()).unwrap();
    assert_eq!(report.generator_dim, 2);
    assert_eq!(report.dim_relations, 6);
    assert_eq!(report.dim_zero_module, 24);
    assert_eq!(report.dim_split_relations, 66);
    assert_eq!(report.dim_dual_star, 42);
    assert_eq!(report.dim_split_relations + report.dim_dual_star, 108);
    assert!(report.orthogonality, "{report}");
    assert!(report.passed(), "{report}");
    println!(
        "criterion 11: PASS - dims (R, O3, R3, dual-star) = (6, 24, 66, 42), \
         66 + 42 = 108 = 27N^2, orthogonality holds"
    );
}

#[test]
fn criterion_12_skew_derived_bracket() {
    // As stated: build the skew trialgebra from d/de on the dual numbers and
    // check the bracket laws with [x,y] = x<y - x>y. Two independent
    // obstructions make this unattainable over Q; both are demonstrated
    // here rather than hidden.
    //
    // (1) d/de is not a derivation of Q[e]/(e^2) in characteristic zero:
    //     d(e.e) = 0 but d(e).e + e.d(e) = 2e. The construction verifies its
    //     preconditions and therefore rejects the input.
    // (2) Even taking the operations the formulas produce, the bracket read
    //     literally as x<y - x>y violates [x.y, z] = x.[y,z] + [x,z].y (take
    //     x = 1, y = e, z = e: left side 0, right side e). The laws do hold
    //     for the dialgebra commutator [x,y] = x<y - y>x on any skew
    //     trialgebra, e.g. from the inner derivation ad(E12) of upper
    //     triangular matrices (covered by the library tests).
    let literal = skew_bracket_identities(BracketConvention::SameOrder);
    match stri_from_derivation(&dual_numbers(), &d_depsilon()) {
        Ok(a) => {
            let report = a.check_identities(&literal).unwrap();
            assert!(
                report.passed(),
                "criterion 12: FAIL - bracket laws do not hold: {report}"
            );
            println!("criterion 12: PASS");
        }
        Err(e) => panic!(
            "criterion 12: FAIL - stri_from_derivation rejects (Q[e]/(e^2), d/de): {e}. \
             The operator satisfies the Leibniz rule only in characteristic 2. \
             Building the operations unchecked does not help: the literal bracket \
             x<y - x>y fails the law [x.y, z] = x.[y,z] + [x,z].y at (1, e, e), \
             whereas the dialgebra commutator x<y - y>x satisfies both laws on every \
             skew trialgebra (verified in the library tests on ad(E12))."
        ),
    }
}
