use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic order must be at least 3, got {0}")]
    CyclotomicOrder(u32),
    #[error("duplicate parameter `{0}`")]
    DuplicateParam(String),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("`{0}` is not invertible")]
    NotInvertible(String),
    #[error("denominator vanishes: {0}")]
    VanishingDenominator(String),
    #[error("zero assigned to invertible symbol `{0}`")]
    ZeroAssignedToInvertible(String),
    #[error("no value assigned to `{0}`")]
    MissingAssignment(String),
    #[error("q-binomial needs 0 <= r <= n, got n={n}, r={r}")]
    InvalidBinomial { n: u32, r: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("rule does not decrease in the monomial order: {0}")]
    RuleOrder(String),
    #[error("duplicate rule left-hand side `{0}`")]
    DuplicateLhs(String),
    #[error("q must not be 1 or -1 for this algebra")]
    DegenerateQ,
    #[error("linear map undefined on `{0}`")]
    UndefinedMapValue(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("expected {expected} basis words, found {found}")]
    BasisCount { expected: usize, found: usize },
    #[error("not a 2-cocycle: {0}")]
    NotACocycle(String),
    #[error("not a group algebra: {0}")]
    NotGroupAlgebra(String),
    #[error("singular system: {0}")]
    SingularSystem(String),
    #[error("more than one surviving degree: {0}")]
    MultipleDegrees(String),
    #[error("degree-zero assertion failed: {0}")]
    DegreeAssertion(String),
    #[error("candidate rejected: {0}")]
    CandidateRejected(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid root of unity: {0}")]
    InvalidRoot(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
