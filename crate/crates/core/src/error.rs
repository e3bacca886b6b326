use thiserror::Error;

/// Unified error type for the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, exceeding the cap of {cap}")]
    OverCap { n: usize, cap: usize },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph6: empty input line")]
    G6Empty,

    #[error("graph6: long-form headers (n > 62) are not supported")]
    G6LongForm,

    #[error("graph6: byte {byte:#04x} at position {pos} outside printable range 63..=126")]
    G6BadByte { byte: u8, pos: usize },

    #[error("graph6: body has {got} bytes, expected {want} for n = {n}")]
    G6BadLength { n: usize, got: usize, want: usize },

    #[error("graph6: nonzero padding bits in final body byte")]
    G6TrailingBits,

    #[error("graph6: decoded order {n} exceeds the configured cap {cap}")]
    G6OverCap { n: usize, cap: usize },

    #[error("graph6 encoding supports only n <= 62, got {n}")]
    G6Unencodable { n: usize },

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("complete graph has no cut-set")]
    CompleteGraph,

    #[error("construct_H requires kappa <= t, got kappa = {kappa}, t = {t}")]
    HKappaTooLarge { kappa: usize, t: usize },

    #[error("disjoint_copies requires at least one copy")]
    ZeroCopies,

    #[error("no path between {u} and {v}")]
    NoPath { u: usize, v: usize },

    #[error("scheme: vertex {v} is not on the cycle")]
    SchemeVertexOffCycle { v: usize },

    #[error("scheme bound {clause}: guard violated ({reason})")]
    ClauseGuard { clause: &'static str, reason: String },

    #[error("audit refused: scheme is {reason}")]
    AuditRefused { reason: &'static str },

    #[error("path-system search cap exceeded: {n} vertices, cap {cap}")]
    PathSysOverCap { n: usize, cap: usize },

    #[error("no valid up-system exists over this fragment frame")]
    NoUpSystem,

    #[error("special down path requested outside the f = 2, S \u{2284} V-up case")]
    SpecialCaseNotApplicable,

    #[error("unknown statement id {0:?}")]
    UnknownStatement(String),

    #[error("search node budget exhausted")]
    BudgetExhausted,

    #[error("search cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;
