//! Parameter sets behind the four entropy-trend figures: R_p against n, p,
//! Z and D for highly excited (Rydberg) states.

use serde::{Deserialize, Serialize};

use crate::entropy::{entropy_report, entropy_sweep, Backend, EntropyConfig, EntropyReport};
use crate::error::Result;
use crate::hydrogenic::QuantumState;

/// The swept variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    N,
    P,
    Z,
    D,
}

impl Axis {
    pub fn label(self) -> &'static str {
        match self {
            Axis::N => "n",
            Axis::P => "p",
            Axis::Z => "Z",
            Axis::D => "D",
        }
    }
}

/// One curve: a fixed configuration and the axis values to visit.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub axis: Axis,
    pub dim: u32,
    pub n: u32,
    pub l: u32,
    pub z: f64,
    pub p: f64,
    pub values: Vec<f64>,
    pub backend: Backend,
}

impl Series {
    /// (state, p) at every axis value, in axis order.
    pub fn points(&self) -> Result<Vec<(QuantumState, f64)>> {
        self.values
            .iter()
            .map(|&v| {
                let (mut dim, mut n, mut z, mut p) = (self.dim, self.n, self.z, self.p);
                match self.axis {
                    Axis::N => n = v as u32,
                    Axis::P => p = v,
                    Axis::Z => z = v,
                    Axis::D => dim = QuantumState::dimension_from_real(v)?,
                }
                Ok((QuantumState::with_l(dim, z, n, self.l)?, p))
            })
            .collect()
    }

    /// Reports along the series. A Z axis is served from the first value by
    /// the exact Z-translation of R_p.
    pub fn evaluate(&self, backend: Backend, cfg: &EntropyConfig) -> Result<Vec<EntropyReport>> {
        let points = self.points()?;
        if self.axis == Axis::Z {
            let Some((first, p)) = points.first() else { return Ok(Vec::new()) };
            let base = entropy_report(first, *p, backend, cfg)?;
            return self.values.iter().map(|&z| base.translated_to_z(z)).collect();
        }
        entropy_sweep(&points, backend, cfg).into_iter().collect()
    }
}

fn range(start: u32, stop: u32, step: u32) -> Vec<f64> {
    (start..=stop).step_by(step.max(1) as usize).map(f64::from).collect()
}

/// R_p against n ∈ [50, 200] for s states: (p, D) = (5/4, 6), (10/7, 5), (3/4, 4), (3, 2).
pub fn fig1(step: u32) -> Vec<Series> {
    [(1.25, 6), (10.0 / 7.0, 5), (0.75, 4), (3.0, 2)]
        .into_iter()
        .map(|(p, dim)| Series {
            name: format!("D={dim} p={p}"),
            axis: Axis::N,
            dim,
            n: 50,
            l: 0,
            z: 1.0,
            p,
            values: range(50, 200, step),
            backend: Backend::Exact,
        })
        .collect()
}

/// R_p against p for (n, l, D) = (100, 1, 4): integers 2..10 plus 1.25, 1.5, 1.75.
pub fn fig2() -> Vec<Series> {
    let mut values = vec![1.25, 1.5, 1.75];
    values.extend(range(2, 10, 1));
    vec![Series {
        name: "n=100 l=1 D=4".into(),
        axis: Axis::P,
        dim: 4,
        n: 100,
        l: 1,
        z: 1.0,
        p: 2.0,
        values,
        backend: Backend::Exact,
    }]
}

/// R_p against Z = 1..103 for n = 100 s states: (p, D) = (3, 2), (3/4, 4).
pub fn fig3() -> Vec<Series> {
    [(3.0, 2), (0.75, 4)]
        .into_iter()
        .map(|(p, dim)| Series {
            name: format!("D={dim} p={p}"),
            axis: Axis::Z,
            dim,
            n: 100,
            l: 0,
            z: 1.0,
            p,
            values: range(1, 103, 1),
            backend: Backend::Exact,
        })
        .collect()
}

/// R_p against D ∈ [50, 200] for the n = 100 s state at p = 1/2 and 4, from
/// the large-n leading term.
pub fn fig4(step: u32) -> Vec<Series> {
    [0.5, 4.0]
        .into_iter()
        .map(|p| Series {
            name: format!("p={p}"),
            axis: Axis::D,
            dim: 50,
            n: 100,
            l: 0,
            z: 1.0,
            p,
            values: range(50, 200, step),
            backend: Backend::Asymptotic,
        })
        .collect()
}

/// Preset by name: "fig1" … "fig4".
pub fn preset(name: &str) -> Option<Vec<Series>> {
    match name {
        "fig1" => Some(fig1(25)),
        "fig2" => Some(fig2()),
        "fig3" => Some(fig3()),
        "fig4" => Some(fig4(10)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_have_expected_shapes() {
        assert_eq!(fig1(25)[0].values, vec![50.0, 75.0, 100.0, 125.0, 150.0, 175.0, 200.0]);
        assert_eq!(fig2()[0].values.len(), 12);
        assert_eq!(fig3()[1].values.len(), 103);
        assert_eq!(fig4(1)[0].values.len(), 151);
        assert!(preset("fig5").is_none());
    }

    #[test]
    fn points_respect_axis() {
        let s = &fig4(50)[1];
        let pts = s.points().unwrap();
        assert_eq!(pts.iter().map(|(st, _)| st.dim).collect::<Vec<_>>(), vec![50, 100, 150, 200]);
        assert!(pts.iter().all(|(_, p)| *p == 4.0));
    }
}
