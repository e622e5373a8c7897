use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("genus {genus} is out of range (must be at least {min})")]
    GenusOutOfRange { genus: u32, min: u32 },

    #[error("Eulerian number A({n}, {k}) is undefined (need 0 <= k < n)")]
    EulerianOutOfRange { n: u32, k: u32 },

    #[error("truncation order must be at least {min}, got {got}")]
    TruncationTooLow { got: i64, min: i64 },

    #[error("expansion order {0} must be even")]
    OddOrder(i32),

    #[error("series would have a pole of order {0}; the worst allowed pole is λ^-2")]
    PoleTooDeep(i32),

    #[error("series has no nonzero coefficient within its truncation and cannot be inverted")]
    NotInvertible,

    #[error("rational function has a zero denominator")]
    ZeroDenominator,

    #[error("rational function has a pole at q = 0 and no power-series expansion")]
    PoleAtOrigin,

    #[error("series has a nonzero constant term and no θ_q anti-derivative")]
    NoAntiDerivative,

    #[error("duplicate curve class label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown curve class label `{0}`")]
    UnknownClass(String),
}
