use num_complex::Complex64;

use super::line::ProjectiveLine;

/// The three S₄-orbits of lines on the Fermat cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineColor {
    Blue,
    Green,
    Red,
}

#[derive(Clone, Debug)]
pub struct ExactLine {
    pub notation: &'static str,
    pub color: LineColor,
    pub line: ProjectiveLine,
}

const BLUE: [&str; 12] = [
    "w:-w:z:ζz",
    "w:-w:z:ζ^-1z",
    "w:ζw:z:-z",
    "w:ζ^-1w:z:-z",
    "w:z:ζw:-z",
    "w:z:ζ^-1w:-z",
    "w:z:-w:ζz",
    "w:z:-w:ζ^-1z",
    "w:z:-z:ζw",
    "w:z:-z:ζ^-1w",
    "w:z:ζz:-w",
    "w:z:ζ^-1z:-w",
];

const GREEN: [&str; 12] = [
    "w:ζw:z:ζz",
    "w:ζw:z:ζ^-1z",
    "w:ζ^-1w:z:ζz",
    "w:ζ^-1w:z:ζ^-1z",
    "w:z:ζw:ζz",
    "w:z:ζw:ζ^-1z",
    "w:z:ζ^-1w:ζz",
    "w:z:ζ^-1w:ζ^-1z",
    "w:z:ζz:ζw",
    "w:z:ζ^-1z:ζw",
    "w:z:ζz:ζ^-1w",
    "w:z:ζ^-1z:ζ^-1w",
];

const RED: [&str; 3] = ["w:-w:z:-z", "w:z:-w:-z", "w:z:-z:-w"];

fn zeta() -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::PI / 3.0)
}

/// Parses `[a:b:c:d]` in the variables `w, z`, each entry an optional
/// coefficient `-`, `ζ`, `ζ^-1` (or `-ζ`, `-ζ^-1`) followed by `w` or `z`.
/// Returns the points at `[w:z] = [1:0]` and `[0:1]`.
pub fn parse_fermat_line(s: &str) -> Option<ProjectiveLine> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    let entries: Vec<&str> = body.split(':').map(str::trim).collect();
    if entries.len() != 4 {
        return None;
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut p = [zero; 4];
    let mut q = [zero; 4];
    for (k, entry) in entries.iter().enumerate() {
        let (coeff, var) = parse_entry(entry)?;
        match var {
            'w' => p[k] = coeff,
            'z' => q[k] = coeff,
            _ => return None,
        }
    }
    ProjectiveLine::from_span(&p, &q).ok()
}

fn parse_entry(entry: &str) -> Option<(Complex64, char)> {
    let compact: String = entry.chars().filter(|c| !c.is_whitespace()).collect();
    let var = compact.chars().last()?;
    let mut prefix = &compact[..compact.len() - var.len_utf8()];
    let mut c = Complex64::new(1.0, 0.0);
    if let Some(rest) = prefix.strip_prefix('-') {
        c = -c;
        prefix = rest;
    }
    match prefix {
        "" => {}
        "ζ" => c *= zeta(),
        "ζ^-1" | "ζ^{-1}" => c *= zeta().inv(),
        _ => return None,
    }
    Some((c, var))
}

/// The 27 lines of `Σ xᵢ³ = 0` in closed form, with `ζ = exp(iπ/3)`.
pub fn fermat_lines_exact() -> Vec<ExactLine> {
    let tagged = BLUE
        .iter()
        .map(|s| (*s, LineColor::Blue))
        .chain(GREEN.iter().map(|s| (*s, LineColor::Green)))
        .chain(RED.iter().map(|s| (*s, LineColor::Red)));
    tagged
        .map(|(notation, color)| ExactLine {
            notation,
            color,
            line: parse_fermat_line(notation).expect("table entries parse"),
        })
        .collect()
}
