use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("relation is not length-homogeneous: {0}")]
    InhomogeneousRelation(String),
    #[error("ideal is not admissible: degree {degree} still contributes {new_elements} basis paths")]
    NotAdmissible { degree: usize, new_elements: usize },
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("module is projective; the translate is undefined")]
    ProjectiveInput,
    #[error("module is injective; the inverse translate is undefined")]
    InjectiveInput,
    #[error("enumeration is incomplete: {0}")]
    IncompleteEnumeration(String),
    #[error("algebra is not {0}")]
    NotAuslander(String),
    #[error("subcategory characterisations disagree for {set}: {detail}")]
    CharacterizationMismatch { set: String, detail: String },
    #[error("stratum formula mismatch: expected {expected}, observed {observed}")]
    FormulaMismatch { expected: i64, observed: i64 },
    #[error("found {0} distinct cluster tilting sets")]
    AmbiguousClusterTilting(usize),
    #[error("Cartan matrix mismatch: {0}")]
    CartanMismatch(String),
    #[error("could not split a decomposable module: {0}")]
    DecompositionFailed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
