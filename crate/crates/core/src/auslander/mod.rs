//! Higher Auslander algebras: the homological profile, the subcategories cut
//! out by the projective-injective modules, counts of the top projective
//! dimension stratum, cluster tilting and the type A tower.

mod catalog;
mod cluster;
mod profile;
mod report;
mod strata;
mod ttf;

pub use catalog::Catalog;
pub use cluster::{ext_table, find_cluster_tilting, iyama_tower_crosscheck, tower_orientation, TowerReport};
pub use profile::{
    dominant_dimension, global_dimension, is_n_auslander, prinj_generator, simple_pd_table, AuslanderProfile,
    DominantDimension, PrinjGenerator,
};
pub use report::{
    closed_form_count, known_strata, strata_report, theorem48_cases, theorem48_report, torsion_report, tower_report,
    AlgebraRef, FormulaRow, Report, Witness, A43_CYCLE,
};
pub use strata::{
    cover_envelope_report, pd_stratum_report, predicted_non_projective, CoverEnvelopeReport, StratumTable,
    SyzygyCoverage,
};
pub use ttf::{fac_nu_inv_q, perp_q, sub_q, subcategories, verify_ttf, Subcategories, TorsionPairCheck, TtfReport};
