use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::cubic::CubicSurface;
use super::finder::{find_lines, FinderOptions, LineFinderReport};
use super::GeometryError;

/// A symmetric cubic that passed the line search, with its lines.
#[derive(Clone, Debug)]
pub struct SampledSurface {
    pub surface: CubicSurface,
    pub report: LineFinderReport,
    /// Coefficients of `Σxᵢ³`, `Σ_{i≠j} xᵢ²xⱼ`, `Σ_{i<j<k} xᵢxⱼxₖ`.
    pub coefficients: [f64; 3],
    /// Number of draws, including the accepted one.
    pub attempts: usize,
}

/// Draws standard normal coefficients in the monomial-symmetric basis until
/// the surface has 27 simple lines, at most `retry_budget` times.
pub fn random_symmetric_cubic(
    seed: u64,
    retry_budget: usize,
    opts: &FinderOptions,
) -> Result<SampledSurface, GeometryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=retry_budget {
        let coefficients: [f64; 3] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
        let surface = CubicSurface::symmetric(coefficients)?;
        match find_lines(&surface, seed.wrapping_add(attempt as u64), opts) {
            Ok(report) => {
                return Ok(SampledSurface {
                    surface,
                    report,
                    coefficients,
                    attempts: attempt,
                })
            }
            Err(GeometryError::DegenerateSurface(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GeometryError::BudgetExhausted(retry_budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_symmetric_and_smooth() {
        let s = random_symmetric_cubic(1, 5, &FinderOptions::default()).unwrap();
        assert!(s.surface.is_symmetric());
        assert!(s.surface.is_real());
        assert_eq!(s.report.lines.len(), 27);
    }

    #[test]
    fn same_seed_same_surface() {
        let a = random_symmetric_cubic(42, 5, &FinderOptions::default()).unwrap();
        let b = random_symmetric_cubic(42, 5, &FinderOptions::default()).unwrap();
        assert_eq!(a.coefficients, b.coefficients);
        assert_eq!(a.report.lines, b.report.lines);
    }

    #[test]
    fn empty_budget() {
        assert_eq!(
            random_symmetric_cubic(0, 0, &FinderOptions::default()).unwrap_err(),
            GeometryError::BudgetExhausted(0)
        );
    }
}
