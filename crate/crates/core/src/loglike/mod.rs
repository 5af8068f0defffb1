//! Log-like maps `λ: G → 𝔤` for `GL_n`, `SL_n` and `Sp_4`.

pub mod checks;
pub mod map;
pub mod sl2;
pub mod sp4;
pub mod verify;

pub use checks::{check_induction_compat, check_jordan_compat, check_stratification, in_etale_locus, JordanCompat};
pub use map::{etale_certificate, EtaleCertificate, LogLikeMap, MapKind};
pub use sl2::{sl2_char2_report, Sl2Char2Report};
pub use sp4::{minimal_levi_probe, minimal_levi_survey, sp4_isolated_report, MinimalLeviVerdict, Sp4IsolatedReport};
pub use verify::{verify, Claim, VerificationReport, VerifyOptions};
