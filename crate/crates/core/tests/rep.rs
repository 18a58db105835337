use proptest::prelude::*;
use quiverrep::fixtures;
use quiverrep::linalg::{Matrix, PrimeField, Rationals};
use quiverrep::rep::{ModuleCategory, Morphism, ProjDim, Representation, Splitter};

fn cat_q(name: &str) -> ModuleCategory<Rationals> {
    ModuleCategory::new(fixtures::by_name(name).unwrap().build(Rationals).unwrap()).unwrap()
}

#[test]
fn linear_a2_basics() {
    let cat = cat_q("kA(2)");
    let p1 = cat.projective(0).clone();
    assert_eq!(p1.dims(), &[1, 1]);
    assert!(cat.is_projective(&p1));
    assert!(cat.is_injective(&p1));
    let s1 = cat.simple(0);
    let s2 = cat.simple(1);
    assert!(cat.is_injective(&s1));
    assert!(!cat.is_injective(&s2));
    assert_eq!(cat.injective(0).dims(), &[1, 0]);
    assert_eq!(cat.socle_dims(&p1), vec![0, 1]);
    assert_eq!(cat.top_dims(&p1), vec![1, 0]);
    let omega = cat.syzygy(&s1);
    assert_eq!(omega.dims(), &[0, 1]);
    assert_eq!(cat.proj_dimension(&s1), ProjDim::Finite(1));
    assert_eq!(cat.proj_dimension(&s2), ProjDim::Finite(0));
    assert_eq!(cat.proj_dimension(&cat.zero()), ProjDim::Zero);
    assert_eq!(cat.ext_dim(&s1, &s2, 1), 1);
    assert_eq!(cat.ext_dim(&s2, &s1, 1), 0);
    assert_eq!(cat.hom_dim(&p1, &s1), 1);
    assert_eq!(cat.hom_dim(&s2, &p1), 1);
    let tau = cat.tau(&s1).unwrap();
    assert_eq!(tau.dims(), &[0, 1]);
    assert!(cat.tau(&s2).is_err());
    let back = cat.tau_inverse(&s2).unwrap();
    assert_eq!(back.dims(), &[1, 0]);
}

#[test]
fn example_2_8_projectives_and_injectives() {
    let cat = cat_q("example-2.8");
    // P(v) has top v and follows arrows towards 1
    let want_p: [&[usize]; 7] = [
        &[1, 0, 0, 0, 0, 0, 0],
        &[1, 1, 0, 0, 0, 0, 0],
        &[0, 1, 1, 0, 0, 0, 0],
        &[0, 0, 1, 1, 0, 0, 0],
        &[0, 0, 1, 1, 1, 0, 0],
        &[0, 0, 0, 0, 1, 1, 0],
        &[0, 0, 0, 0, 0, 1, 1],
    ];
    for (v, w) in want_p.iter().enumerate() {
        assert_eq!(cat.projective(v).dims(), *w, "P({})", v + 1);
    }
    assert_eq!(cat.injective(2).dims(), &[0, 0, 1, 1, 1, 0, 0]);
    assert_eq!(cat.proj_dimension(&cat.simple(3)), ProjDim::Finite(3));
    assert_eq!(cat.proj_dimension(&cat.simple(6)), ProjDim::Finite(3));
}

#[test]
fn tau_on_example_3_5() {
    // radical square zero on a line: τ S(i) = S(i−1)
    let cat = cat_q("example-3.5(2)");
    for v in 1..4 {
        if cat.is_projective(&cat.simple(v)) {
            continue;
        }
        let t = cat.tau(&cat.simple(v)).unwrap();
        let mut want = [0; 4];
        want[v - 1] = 1;
        assert_eq!(t.dims(), &want[..]);
    }
}

#[test]
fn decomposition_of_a_sum() {
    let cat = cat_q("kA(3)");
    let x = Representation::sum_all(
        cat.algebra(),
        &[cat.projective(0), cat.projective(0), &cat.simple(1), cat.projective(1)],
    );
    let mut sp = Splitter::new(&cat, 7);
    let parts = sp.decompose(&x).unwrap();
    assert_eq!(parts.len(), 4);
    let mut dims: Vec<Vec<usize>> = parts.iter().map(|p| p.dims().to_vec()).collect();
    dims.sort();
    assert_eq!(dims, vec![vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]);
    for p in &parts {
        assert!(sp.is_indecomposable(p).unwrap());
    }
    assert!(sp.is_isomorphic(&parts[0], &parts[0].clone()));
}

#[test]
fn small_prime_is_rejected_for_trace_form() {
    let f = PrimeField::new(2).unwrap();
    let cat = ModuleCategory::new(fixtures::linear(2).unwrap().build(f).unwrap()).unwrap();
    let x = cat.projective(0).direct_sum(&f, cat.projective(0));
    let mut sp = Splitter::new(&cat, 1);
    assert!(sp.decompose(&x).is_err());
}

#[test]
fn iyama_projectives_are_indecomposable() {
    let cat = ModuleCategory::new(fixtures::iyama(3, 2).unwrap().build(Rationals).unwrap()).unwrap();
    let mut sp = Splitter::new(&cat, 3);
    for v in 0..cat.vertex_count() {
        assert!(sp.is_indecomposable(cat.projective(v)).unwrap());
        assert!(sp.is_indecomposable(&cat.injective(v)).unwrap());
    }
}

/// A representation of kA(3) given by two arbitrary matrices.
fn a3_rep(cat: &ModuleCategory<Rationals>, d: [usize; 3], e: &[i64]) -> Representation<Rationals> {
    let f = Rationals;
    let m1 = Matrix::from_i64(&f, d[1], d[0], &e[..d[0] * d[1]]);
    let m2 = Matrix::from_i64(&f, d[2], d[1], &e[d[0] * d[1]..d[0] * d[1] + d[1] * d[2]]);
    Representation::new(cat.algebra(), d.to_vec(), vec![m1, m2]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hom_matches_naive(
        dx in prop::array::uniform3(0usize..3),
        dy in prop::array::uniform3(0usize..3),
        ex in prop::collection::vec(-2i64..=2, 8),
        ey in prop::collection::vec(-2i64..=2, 8),
    ) {
        let cat = cat_q("kA(3)");
        let x = a3_rep(&cat, dx, &ex);
        let y = a3_rep(&cat, dy, &ey);
        let fast = cat.hom_basis(&x, &y);
        let slow = cat.hom_basis_naive(&x, &y);
        prop_assert_eq!(fast.len(), slow.len());
        prop_assert_eq!(cat.hom_dim(&x, &y), slow.len());
        for g in &fast {
            prop_assert!(g.is_homomorphism(cat.algebra(), &x, &y));
        }
        // the fast basis is independent
        let flat: Vec<_> = fast.iter().flat_map(|g| g.flatten()).collect();
        if !fast.is_empty() {
            let n = flat.len() / fast.len();
            let m = Matrix::from_data(&Rationals, fast.len(), n, flat).unwrap();
            prop_assert_eq!(m.rank(), fast.len());
        }
    }

    #[test]
    fn euler_form_on_a3(
        dx in prop::array::uniform3(0usize..3),
        dy in prop::array::uniform3(0usize..3),
        ex in prop::collection::vec(-2i64..=2, 8),
        ey in prop::collection::vec(-2i64..=2, 8),
    ) {
        // hereditary: dim Hom − dim Ext¹ is the Euler form of the dimension vectors
        let cat = cat_q("kA(3)");
        let x = a3_rep(&cat, dx, &ex);
        let y = a3_rep(&cat, dy, &ey);
        let euler = (0..3).map(|i| (dx[i] * dy[i]) as i64).sum::<i64>()
            - (dx[0] * dy[1] + dx[1] * dy[2]) as i64;
        let lhs = cat.hom_dim(&x, &y) as i64 - cat.ext_dim(&x, &y, 1) as i64;
        prop_assert_eq!(lhs, euler);
        prop_assert_eq!(cat.ext_dim(&x, &y, 2), 0);
    }

    #[test]
    fn syzygy_sequence_is_exact(
        d in prop::array::uniform3(0usize..3),
        e in prop::collection::vec(-2i64..=2, 8),
    ) {
        let cat = cat_q("kA(3)");
        let x = a3_rep(&cat, d, &e);
        let pres = cat.presentation(&x);
        let total: usize = pres.cover.projective.total_dim();
        prop_assert_eq!(total, x.total_dim() + pres.syzygy.total_dim());
        prop_assert!(pres.cover.epi.is_surjective());
        prop_assert!(pres.inclusion.is_injective());
        prop_assert!(pres.cover.epi.compose(&pres.inclusion).is_zero());
        let id = Morphism::identity(&Rationals, &x);
        prop_assert!(id.is_homomorphism(cat.algebra(), &x, &x));
    }
}
