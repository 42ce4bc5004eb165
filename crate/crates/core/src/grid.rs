use crate::error::{Error, Result};

/// Uniform time grid t_i = t0 + i*h, i = 0..=n_steps.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UniformGrid {
    pub t0: f64,
    pub h: f64,
    pub n_steps: usize,
}

impl UniformGrid {
    pub fn new(t0: f64, h: f64, n_steps: usize) -> Result<UniformGrid> {
        if !t0.is_finite() || !(h > 0.0) || !h.is_finite() {
            return Err(Error::Domain(format!(
                "grid requires finite t0 and step h > 0, got t0={t0}, h={h}"
            )));
        }
        if n_steps < 1 {
            return Err(Error::Domain("grid requires at least one step".into()));
        }
        Ok(UniformGrid { t0, h, n_steps })
    }

    /// Grid over [0, t_max] with `steps` intervals (steps + 1 points).
    pub fn span(t_max: f64, steps: usize) -> Result<UniformGrid> {
        if !(t_max > 0.0) {
            return Err(Error::Domain(format!("t_max must be positive, got {t_max}")));
        }
        UniformGrid::new(0.0, t_max / steps as f64, steps)
    }

    pub fn len(&self) -> usize {
        self.n_steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// i*h + t0; the multiplicative form keeps runs over the same grid
    /// bit-for-bit reproducible.
    pub fn t(&self, i: usize) -> f64 {
        self.t0 + (i as f64) * self.h
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.t(i))
    }
}

/// Samples of a function on a uniform grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    pub grid: UniformGrid,
    pub values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: UniformGrid, values: Vec<f64>) -> Result<GridFunction> {
        if values.len() != grid.len() {
            return Err(Error::Domain(format!(
                "value count {} does not match grid size {}",
                values.len(),
                grid.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!("grid function sample {v}")));
        }
        Ok(GridFunction { grid, values })
    }

    /// Sample a scalar function over the grid.
    pub fn tabulate(grid: UniformGrid, mut f: impl FnMut(f64) -> Result<f64>) -> Result<GridFunction> {
        let values = grid.points().map(&mut f).collect::<Result<Vec<_>>>()?;
        GridFunction::new(grid, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_matches_manual_construction() {
        let g = UniformGrid::span(5.0, 500).unwrap();
        assert_eq!(g.h, 0.01);
        assert_eq!(g.len(), 501);
        assert_eq!(g.t(190), 190.0 * 0.01);
        assert_eq!(g.points().count(), 501);
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(UniformGrid::new(0.0, 0.0, 5).is_err());
        assert!(UniformGrid::new(0.0, -1.0, 5).is_err());
        assert!(UniformGrid::new(0.0, 1.0, 0).is_err());
        assert!(UniformGrid::span(-1.0, 10).is_err());
    }

    #[test]
    fn grid_function_validates_shape_and_finiteness() {
        let g = UniformGrid::new(0.0, 0.5, 2).unwrap();
        assert!(GridFunction::new(g, vec![1.0, 2.0]).is_err());
        assert!(GridFunction::new(g, vec![1.0, f64::NAN, 2.0]).is_err());
        let f = GridFunction::tabulate(g, |t| Ok(t * t)).unwrap();
        assert_eq!(f.values, vec![0.0, 0.25, 1.0]);
    }
}
