use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("qubit count {0} is outside 1..={max}", max = crate::MAX_QUBITS)]
    InvalidQubitCount(u32),
    #[error("letter {letter} is out of range for {n} qubits")]
    LetterOutOfRange { letter: u32, n: u32 },
    #[error("letter {0} is repeated within a cycle")]
    RepeatedLetter(u32),
    #[error("image table is not a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("qubit counts differ: {0} vs {1}")]
    QubitCountMismatch(u32, u32),
    #[error("a transposition needs two distinct letters, got ({0},{0})")]
    SameLetters(u32),
    #[error("a cycle needs at least two letters")]
    ShortCycle,
    #[error("the permutation moves no letters")]
    Identity,
    #[error("letter {0} is not in the cycle")]
    AnchorNotInCycle(u32),
    #[error("letter {0} is in the cycle")]
    LetterInCycle(u32),
    #[error("matrix view is limited to n <= {max}, got {0}", max = crate::perm::MATRIX_MAX_QUBITS)]
    MatrixTooLarge(u32),
    #[error("transposition ({0},{1}) is not bit-wise adjacent")]
    NotBitAdjacent(u32, u32),
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("ancilla left dirty for input {0}")]
    DirtyAncilla(u64),
    #[error("circuit does not act as a bijection on the register")]
    NonBijective,
    #[error("oracle search supports n <= {max}, got {0}", max = crate::oracle::ORACLE_MAX_QUBITS)]
    OracleTooLarge(u32),
}
