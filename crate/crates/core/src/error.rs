use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence length {len} exceeds the maximum of {max}")]
    InputTooLarge { len: usize, max: usize },

    #[error("cell ({i}, {j}) is outside the {m}x{n} prefix range")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        m: usize,
        n: usize,
    },

    #[error("naive backtrace exceeded the limit of {limit} paths")]
    PathLimitExceeded { limit: usize },
}
