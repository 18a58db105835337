use quiverrep::artheory::{enumerate_indecomposables, Caps};
use quiverrep::auslander::{
    dominant_dimension, find_cluster_tilting, global_dimension, is_n_auslander, iyama_tower_crosscheck,
    pd_stratum_report, prinj_generator, verify_ttf, AuslanderProfile, Catalog,
};
use quiverrep::fixtures;
use quiverrep::linalg::Rationals;
use quiverrep::rep::ModuleCategory;

const SEED: u64 = 2813;

fn cat(name: &str) -> ModuleCategory<Rationals> {
    ModuleCategory::new(fixtures::by_name(name).unwrap().build(Rationals).unwrap()).unwrap()
}

fn iyama(m: usize, n: usize) -> ModuleCategory<Rationals> {
    ModuleCategory::new(fixtures::iyama(m, n).unwrap().build(Rationals).unwrap()).unwrap()
}

/// Dimension vector of the uniserial module with composition factors `lo..=hi`
/// on the seven-vertex line.
fn interval(lo: usize, hi: usize) -> Vec<usize> {
    (1..=7).map(|v| usize::from(lo <= v && v <= hi)).collect()
}

fn dims_of(c: &Catalog<'_, Rationals>, idx: &[usize]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = idx.iter().map(|&i| c.modules[i].dims().to_vec()).collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

#[test]
fn semisimple_and_hereditary_profiles() {
    let k = cat("kA(1)");
    assert_eq!(global_dimension(&k), Some(0));
    let d = dominant_dimension(&k);
    assert!(d.capped);
    let a3 = cat("kA(3)");
    assert_eq!(global_dimension(&a3), Some(1));
    // I(P(1)) is projective, but the cosyzygy of P(3) is S(2), which is not
    assert_eq!(dominant_dimension(&a3).value, 1);
    let (ok, _) = is_n_auslander(&a3, 1);
    assert!(!ok);
}

#[test]
fn example_2_8_subcategories() {
    let k = cat("example-2.8");
    let (ok, profile) = is_n_auslander(&k, 2);
    assert!(ok);
    assert_eq!(profile.gld, Some(3));
    assert_eq!(profile.n, Some(2));
    let q = prinj_generator(&k, &profile).unwrap();
    let qd = sorted(q.q.iter().map(|x| x.dims().to_vec()).collect());
    assert_eq!(qd, sorted(vec![interval(1, 2), interval(2, 3), interval(3, 5), interval(5, 6), interval(6, 7)]));

    let en = enumerate_indecomposables(&k, Caps::default(), SEED).unwrap();
    assert_eq!(en.len(), 14);
    let mut c = Catalog::new(&k, &en, SEED).unwrap();
    let t = verify_ttf(&mut c, None).unwrap();
    let s = |v: &[(usize, usize)]| sorted(v.iter().map(|&(a, b)| interval(a, b)).collect());
    assert_eq!(
        dims_of(&c, &t.sets.fac),
        s(&[(1, 1), (2, 2), (3, 3), (5, 5), (6, 6), (1, 2), (2, 3), (4, 5), (5, 6), (3, 5)])
    );
    assert_eq!(dims_of(&c, &t.sets.perp), s(&[(4, 4), (7, 7)]));
    assert_eq!(
        dims_of(&c, &t.sets.sub),
        s(&[(1, 1), (2, 2), (3, 3), (5, 5), (6, 6), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (3, 5)])
    );
    assert!(t.pairs.iter().all(|p| p.pass()), "{:?}", t.pairs);
    assert!(!t.fac_in_sub);
    assert_eq!(t.fac_not_sub, vec!["0001100".to_string()]);
}

#[test]
fn example_3_5_strata() {
    for n in 2..=4 {
        let k = cat(&format!("example-3.5({n})"));
        let p = AuslanderProfile::compute(&k);
        assert_eq!(p.n, Some(n), "example 3.5({n})");
        let en = enumerate_indecomposables(&k, Caps::default(), SEED).unwrap();
        let mut c = Catalog::new(&k, &en, SEED).unwrap();
        let s = pd_stratum_report(&mut c).unwrap();
        assert_eq!(s.t[0], 1);
        assert!(s.t[1..].iter().all(|&x| x == 0));
        assert_eq!(s.non_projective, n + 1);
        assert!(s.coverage.complete());
    }
}

#[test]
fn a3_strata_and_fac_in_sub() {
    for n in 2..=3 {
        let k = iyama(3, n);
        let en = enumerate_indecomposables(&k, Caps::default(), SEED).unwrap();
        let mut c = Catalog::new(&k, &en, SEED).unwrap();
        assert_eq!(c.n, n - 1);
        let s = pd_stratum_report(&mut c).unwrap();
        let want: Vec<usize> = (0..=n).map(|i| n + 1 - i).collect();
        assert_eq!(s.t, want);
        assert_eq!(s.top_stratum, (n + 1) * (n + 2) / 2);
        assert!(s.coverage.complete(), "{:?}", s.coverage);
        let t = verify_ttf(&mut c, Some(n - 1)).unwrap();
        assert!(t.fac_in_sub);
        assert_eq!(t.gld_criterion, Some(true));
        assert_eq!(t.sets.perp.len(), 2 * n + 1);
    }
}

#[test]
fn cluster_tilting_counts() {
    let k = cat("kA(3)");
    let en = enumerate_indecomposables(&k, Caps::default(), SEED).unwrap();
    assert_eq!(find_cluster_tilting(&k, &en, 1).unwrap().unwrap().len(), 6);

    let k = iyama(2, 2);
    let en = enumerate_indecomposables(&k, Caps::default(), SEED).unwrap();
    assert_eq!(find_cluster_tilting(&k, &en, 2).unwrap().unwrap().len(), 4);

    let k = iyama(3, 2);
    let en = enumerate_indecomposables(&k, Caps::default(), SEED).unwrap();
    assert_eq!(find_cluster_tilting(&k, &en, 2).unwrap().unwrap().len(), 10);
}

#[test]
fn tower_small_cases() {
    let r = iyama_tower_crosscheck(&Rationals, 2, 2, Caps::default(), SEED).unwrap();
    assert_eq!(r.hom_total, 5);
    assert!(r.pass(), "{r:?}");
    let r = iyama_tower_crosscheck(&Rationals, 3, 3, Caps::default(), SEED).unwrap();
    assert_eq!(r.summands, 10);
    assert!(r.pass(), "{r:?}");
}
