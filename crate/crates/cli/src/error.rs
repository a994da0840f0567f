use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] repdim_core::Error),

    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for bad input, 1 for a mathematical negative.
    pub fn exit_code(&self) -> u8 {
        use repdim_core::Error as E;
        match self {
            CliError::Read { .. } | CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                E::Parse { .. }
                | E::Io(_)
                | E::UnknownVertex(_)
                | E::UnknownArrow(_)
                | E::DimensionMismatch(_)
                | E::RelationViolated(_)
                | E::InvalidInput(_)
                | E::NotAdmissible(_)
                | E::InfiniteDimensional(_)
                | E::CharacteristicZeroRequired => 2,
                _ => 1,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
