use pillai_core::pillai::{
    admissible_tuples, bound_b, certify, grid_search, instantiate_family, remark2_family,
    solution_instance, solve_equal_squares, AdmissibleTuple, PillaiSolution, Remark2Kind,
};
use pillai_core::polycore::rat;
use pillai_core::unit_equation::verify_bm;
use pillai_core::{BigRat, Error, Poly};
use proptest::prelude::*;

fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

fn int_grid(lo: i64, hi: i64) -> Vec<BigRat> {
    (lo..=hi).map(|c| rat(c, 1)).collect()
}

/// Checks everything a produced solution must satisfy.
fn check_solution(f: &Poly, sol: &PillaiSolution) {
    assert!(
        certify(f, sol).unwrap().is_valid(),
        "{sol} does not certify for {f}"
    );
    assert!(sol.max_parameter() <= bound_b(f).unwrap());
    assert!(admissible_tuples(f).unwrap().contains(&sol.tuple()));
    let inst = solution_instance(f, sol).unwrap();
    let report = verify_bm(&inst);
    assert!(report.subsum_ok && report.holds);
    let budget = 1 + f.deg().unwrap() + sol.left.base_degree() + sol.right.base_degree();
    assert!(report.s_size <= budget as u64);
    assert!(report.max_height <= budget as u64);
}

#[test]
fn grid_solutions_for_four_x_come_from_families() {
    let f = p(&[0, 4]);
    let fams = solve_equal_squares(&f).unwrap();
    let sols = grid_search(&f, &AdmissibleTuple::new(2, 2, 1, 1), &int_grid(-3, 3)).unwrap();
    assert!(!sols.is_empty());
    for sol in &sols {
        check_solution(&f, sol);
        let pp = sol.left.rational_root().expect("rational p");
        let qq = sol.right.rational_root().expect("rational q");
        let hit = fams.iter().find_map(|fam| fam.parameter_for(&pp, &qq));
        let t = hit.unwrap_or_else(|| panic!("{sol} is in no family"));
        let again = fams
            .iter()
            .find_map(|fam| instantiate_family(fam, &t).ok().filter(|s| s == sol));
        assert!(again.is_some());
    }
}

#[test]
fn family_members_satisfy_everything() {
    for f in [
        p(&[0, 4]),
        p(&[-1, 0, 1]),
        p(&[0, 1, 1, 1]),
        p(&[2, -3, 0, 1]),
    ] {
        for fam in solve_equal_squares(&f).unwrap() {
            for t in [rat(1, 2), rat(-1, 2), rat(2, 1), rat(-3, 1), rat(5, 3)] {
                match instantiate_family(&fam, &t) {
                    Ok(sol) => check_solution(&f, &sol),
                    Err(Error::DegenerateDegree { .. }) => {}
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }
}

#[test]
fn remark_families_satisfy_everything() {
    let kinds = [
        Remark2Kind::MonomialK { k: 3, b: rat(2, 1) },
        Remark2Kind::LinearBx { b: rat(3, 1) },
        Remark2Kind::AffineSr {
            s: rat(-2, 1),
            r: rat(5, 1),
        },
        Remark2Kind::ShiftedAffine {
            s: rat(1, 2),
            r: rat(1, 1),
            ell: 2,
        },
        Remark2Kind::Cubic {
            u: rat(2, 1),
            t: rat(-1, 1),
            s: rat(3, 1),
        },
    ];
    for kind in &kinds {
        for a in [rat(1, 1), rat(3, 7)] {
            let (f, sol) = remark2_family(kind, &a).unwrap();
            check_solution(&f, &sol);
        }
    }
}

#[test]
fn degree_two_grid_hits_certify() {
    let f = p(&[-1, 0, 1]);
    for (dp, dq) in [(1, 1), (2, 2)] {
        for sol in grid_search(&f, &AdmissibleTuple::new(2, 2, dp, dq), &int_grid(-2, 2)).unwrap() {
            check_solution(&f, &sol);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The closed forms are polynomial in t of bounded degree, so agreement
    /// at five distinct t proves the identity.
    #[test]
    fn family_identity_holds_symbolically(
        coeffs in prop::collection::vec(-3i64..=3, 2..=4),
        lead in prop_oneof![Just(1i64), Just(-2), Just(3)],
        ts in prop::collection::btree_set((-5i64..=5, 1i64..=4), 5),
    ) {
        let mut c = coeffs;
        c.push(lead);
        let f = p(&c);
        prop_assume!(f.deg().unwrap_or(0) >= 1);
        for fam in solve_equal_squares(&f).unwrap() {
            let mut seen = std::collections::BTreeSet::new();
            for (n, d) in &ts {
                let t = rat(*n, *d);
                if t == rat(0, 1) || !seen.insert(t.clone()) {
                    continue;
                }
                let (pp, qq) = (fam.p_at(&t), fam.q_at(&t));
                prop_assert_eq!(&(&pp * &pp) - &(&qq * &qq), f.clone());
            }
        }
    }
}
