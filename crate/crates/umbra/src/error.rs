use crate::coefficients::FieldKind;

/// Everything that can go wrong inside the engine. Identity verdicts are
/// data, not errors; an `Error` always means a precondition was violated or
/// an internal invariant broke.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by zero polynomial")]
    ZeroDenominatorPoly,
    #[error("scalar variant mismatch: {0} vs {1}")]
    VariantMismatch(FieldKind, FieldKind),
    #[error("lambda must differ from 1")]
    LambdaIsOne,
    #[error("denominator vanishes at lambda = {0}")]
    PoleAtLambda(String),
    #[error("series is not invertible (order {0} > 0)")]
    NotInvertible(usize),
    #[error("quotient not a power series (numerator order {num_order} < denominator order {den_order})")]
    QuotientNotPowerSeries { num_order: usize, den_order: usize },
    #[error("composition requires delta inner series")]
    CompositionRequiresDelta,
    #[error("not a delta series")]
    NotDelta,
    #[error("{op} requires constant term 1")]
    ConstantTermNotOne { op: &'static str },
    #[error("exp requires a series of positive order")]
    ExpRequiresPositiveOrder,
    #[error("order undefined at this precision")]
    OrderUndefined,
    #[error("negative power of non-invertible series")]
    NegativePowerNotInvertible,
    #[error("insufficient precision: need {needed}, have {have}")]
    InsufficientPrecision { needed: usize, have: usize },
    #[error("transfer formula requires p_n(0) = 0")]
    TransferNonzeroConstant,
    #[error("changhee order must be nonzero")]
    ChangheeOrderZero,
    #[error("degree {n} is outside the stated range of the closed form")]
    ClosedFormRange { n: usize },
    #[error("no closed form registered for family {0}")]
    ClosedFormUnavailable(String),
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
