use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cover relation has a cycle through points {0} and {1}")]
    Cycle(usize, usize),
    #[error("point {index} out of range for a carrier of size {size}")]
    Index { index: usize, size: usize },
    #[error("point set belongs to a different poset")]
    Binding,
    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    Capacity {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(&'static str),
    #[error("set is not an upset")]
    NotUpset,
    #[error("map is not monotone: {0} <= {1} but images are unordered")]
    NotMonotone(usize, usize),
    #[error("elements {0} and {1} have no {2}")]
    NotLattice(usize, usize, &'static str),
    #[error("distributivity fails at ({0}, {1}, {2})")]
    Distributivity(usize, usize, usize),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("chain element is not normalized: {0}")]
    Normalization(&'static str),
    #[error("chain syntax: {0}")]
    ChainSyntax(String),
    #[error("homomorphism is not a frame homomorphism")]
    NotFrameHom,
    #[error("isomorphism check failed at ({0}, {1})")]
    IsoFailure(usize, usize),
}
