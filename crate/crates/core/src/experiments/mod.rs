//! Numerical experiments: error tables, rate checks, the asymptotic scaling
//! of the coefficients, and the `r >= 5` closed-form consistency report.

mod checks;
mod jet;
pub mod published;
mod rates;
mod registry;
mod scaling;
mod tables;
mod tau;

pub use checks::{closed_form_worst, compare_error_table, exactness_worst};
pub use jet::Jet;
pub use rates::{
    poly_report_f64, polynomial_voronovskaya, voronovskaya_check, Parity, PolyRateReport,
    RateReport,
};
pub use registry::{TestFunction, MAX_DERIVATIVE};
pub use scaling::{asymptotic_scaling, ScalingRow};
pub use tables::{
    empirical_orders, error_table, paper_style, uniform_grid, EmpiricalOrder, ErrorTable,
    TruncationRule,
};
pub use tau::{tau_consistency, TauForm, TauRow, TauVariant, CORRECTED_TAU, PRINTED_TAU};
