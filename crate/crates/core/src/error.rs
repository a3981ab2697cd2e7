use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("cannot parse group spec {spec:?}: {reason}")]
    GroupSpec { spec: String, reason: String },

    #[error("unknown group name {0:?}")]
    UnknownGroup(String),

    #[error("{what} is out of the supported range: {detail}")]
    OutOfRange { what: String, detail: String },

    #[error("element {0} is not a member of the group")]
    NotMember(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("quotient is not abelian")]
    NotAbelian,

    #[error("subgroup is not perfect")]
    NotPerfect,

    #[error("not an action by automorphisms: {0}")]
    InvalidAction(String),

    #[error("map is not a well-defined homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("search bound exceeded: {what} has order {order}, bound is {bound}")]
    BoundExceeded { what: String, order: u64, bound: u64 },

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("coset enumeration exceeded {max_cosets} cosets ({columns} columns, {max_cells} cells)")]
    EnumerationExceeded {
        max_cosets: usize,
        columns: usize,
        max_cells: usize,
    },

    #[error("coset table is not usable here: {0}")]
    IncompleteTable(String),

    #[error("method {method} is not feasible for this group: {reason}")]
    InfeasibleMethod { method: String, reason: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Resource-cap failures: the computation is valid but too large for the
    /// configured limits.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::BoundExceeded { .. } | Error::EnumerationExceeded { .. } | Error::OutOfRange { .. }
        )
    }
}
