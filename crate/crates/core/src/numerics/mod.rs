//! Special functions and scalar root finding. No domain knowledge lives here.

mod erf;
mod fit;
mod root;

pub use erf::{erf, erfc, erfcx};
pub(crate) use erf::{erf_f, erfcx_f};
pub use fit::fit_loglog_slope;
pub use root::{bracket_decreasing, find_root, Bracket, RootConfig};
