//! Built-in benchmark catalog, addressable by name.
//!
//! | name | dimension | box |
//! |------|-----------|-----|
//! | `sphere` | any | `[-100, 100]` |
//! | `rosenbrock` | any | `[-30, 30]` |
//! | `rastrigin` | any | `[-5.12, 5.12]` |
//! | `ackley` | any | `[-32.768, 32.768]` |
//! | `griewank` | any | `[-600, 600]` |
//! | `schwefel226` | any | `[-500, 500]` |
//! | `levy` | any | `[-10, 10]` |
//! | `rot-rastrigin` | any | `[-5.12, 5.12]` |
//! | `spring` | 3 | see [`engineering::spring_problem`] |
//! | `pressure-vessel` | 4 | see [`engineering::pressure_vessel_problem`] |
//! | `welded-beam` | 4 | see [`engineering::welded_beam_problem`] |

pub mod classic;
pub mod engineering;

pub use engineering::{pressure_vessel_problem, spring_problem, welded_beam_problem};

use crate::error::{invalid_argument, Result};
use crate::problem::Problem;

pub const CLASSIC_NAMES: [&str; 8] = [
    "sphere",
    "rosenbrock",
    "rastrigin",
    "ackley",
    "griewank",
    "schwefel226",
    "levy",
    "rot-rastrigin",
];

pub const ENGINEERING_NAMES: [&str; 3] = ["spring", "pressure-vessel", "welded-beam"];

pub fn names() -> impl Iterator<Item = &'static str> {
    CLASSIC_NAMES
        .iter()
        .chain(ENGINEERING_NAMES.iter())
        .copied()
}

/// Fixed dimension of an engineering problem, `None` for scalable ones.
pub fn fixed_dimension(name: &str) -> Option<usize> {
    match name {
        "spring" => Some(3),
        "pressure-vessel" | "welded-beam" => Some(4),
        _ => None,
    }
}

/// Looks a problem up by catalog name. Scalable problems need `dim >= 2`;
/// engineering problems accept `None` or their own dimension.
pub fn by_name(name: &str, dim: Option<usize>) -> Result<Problem> {
    if let Some(fixed) = fixed_dimension(name) {
        if let Some(d) = dim.filter(|&d| d != fixed) {
            return Err(invalid_argument(format!(
                "problem `{name}` has fixed dimension {fixed}, requested {d}"
            )));
        }
        return Ok(match name {
            "spring" => spring_problem(),
            "pressure-vessel" => pressure_vessel_problem(),
            _ => welded_beam_problem(),
        });
    }
    if !CLASSIC_NAMES.contains(&name) {
        let valid: Vec<&str> = names().collect();
        return Err(invalid_argument(format!(
            "unknown problem `{name}`; valid names: {}",
            valid.join(", ")
        )));
    }
    let d = dim.ok_or_else(|| invalid_argument(format!("problem `{name}` needs a dimension")))?;
    if d < 2 {
        return Err(invalid_argument(format!(
            "problem `{name}` needs dimension >= 2, got {d}"
        )));
    }
    Ok(match name {
        "sphere" => classic::sphere_problem(d),
        "rosenbrock" => classic::rosenbrock_problem(d),
        "rastrigin" => classic::rastrigin_problem(d),
        "ackley" => classic::ackley_problem(d),
        "griewank" => classic::griewank_problem(d),
        "schwefel226" => classic::schwefel226_problem(d),
        "levy" => classic::levy_problem(d),
        _ => classic::rotated_rastrigin_problem(d),
    })
}

/// The eight classic functions at dimension `d`, in [`CLASSIC_NAMES`] order.
pub fn classic_suite(d: usize) -> Result<Vec<Problem>> {
    CLASSIC_NAMES.iter().map(|n| by_name(n, Some(d))).collect()
}
