use thiserror::Error;

/// Error type shared by the model and TDSE modules.
#[derive(Debug, Error)]
pub enum FtError {
    /// Evaluation requested outside the pulse window `[t_i, t_f]`.
    #[error("time out of pulse domain: Re(t) = {re_t} not in [{t_i}, {t_f}]")]
    Domain { re_t: f64, t_i: f64, t_f: f64 },

    /// A guarded denominator (excursion, trajectory radius, ...) vanished.
    #[error("singularity in {what}: |{what}| = {magnitude:.3e} below guard")]
    Singularity { what: &'static str, magnitude: f64 },

    /// Newton iteration failed to converge.
    #[error("Newton did not converge: {reason}")]
    NonConvergence { reason: String },

    /// Argument outside a function's mathematical domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Spectral basis construction failed.
    #[error("basis build failed: {0}")]
    Basis(String),

    /// Hermitian propagation lost norm beyond the instability threshold.
    #[error(
        "propagation unstable: norm drift {drift:.3e} at t = {t:.2} a.u.; \
         reduce dt (dt*e_cut must stay well below 1)"
    )]
    Instability { drift: f64, t: f64 },

    /// File or serialization problem while writing outputs.
    #[error("export failed: {0}")]
    Export(String),
}

impl From<std::io::Error> for FtError {
    fn from(e: std::io::Error) -> Self {
        FtError::Export(e.to_string())
    }
}
