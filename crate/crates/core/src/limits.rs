/// Resource caps. Operations that would exceed them fail with
/// `FieldTooLarge` or `BudgetExceeded` instead of degrading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest field (number of elements) searched exhaustively.
    pub enumeration: u64,
    /// Largest polynomial degree produced by iteration or dynatomic division.
    pub max_degree: usize,
    /// Largest numerator/denominator degree in t for function-field coefficients.
    pub max_coeff_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 1_000_000,
            max_degree: 2000,
            max_coeff_degree: 5000,
        }
    }
}
