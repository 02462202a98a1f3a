//! The discharging rule used for graphs with `mad < 3`: every vertex of
//! degree at least 4 sends 1/2 to each neighbour of degree 2.

use crate::bits::bits;
use crate::graph::OrientedGraph;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DischargeReport {
    pub initial: Vec<Rational>,
    pub charge: Vec<Rational>,
}

impl DischargeReport {
    pub fn total_initial(&self) -> Rational {
        self.initial.iter().copied().sum()
    }

    pub fn total_final(&self) -> Rational {
        self.charge.iter().copied().sum()
    }

    pub fn conserved(&self) -> bool {
        self.total_initial() == self.total_final()
    }

    /// Vertices whose final charge is below 3.
    pub fn below_three(&self) -> Vec<usize> {
        (0..self.charge.len())
            .filter(|&v| self.charge[v] < Rational::integer(3))
            .collect()
    }
}

pub fn discharge_run(g: &OrientedGraph) -> DischargeReport {
    let initial: Vec<Rational> = (0..g.n()).map(|v| Rational::integer(g.degree(v) as i64)).collect();
    let mut charge = initial.clone();
    let half = Rational::new(1, 2);
    for v in 0..g.n() {
        if g.degree(v) < 4 {
            continue;
        }
        for w in bits(g.nbrs(v)) {
            if g.degree(w) == 2 {
                charge[v] = charge[v] - half;
                charge[w] = charge[w] + half;
            }
        }
    }
    DischargeReport { initial, charge }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin;

    #[test]
    fn k4_keeps_its_charge() {
        let r = discharge_run(&builtin("k4").unwrap());
        assert!(r.charge.iter().all(|&c| c == Rational::integer(3)));
        assert!(r.conserved());
    }

    #[test]
    fn star_sends_nothing_to_leaves() {
        let g = OrientedGraph::from_arcs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = discharge_run(&g);
        assert_eq!(r.charge[0], Rational::integer(4));
        assert!(r.charge[1..].iter().all(|&c| c == Rational::ONE));
        assert_eq!(r.total_final(), Rational::integer(8));
    }

    #[test]
    fn hub_feeds_degree_two_neighbours() {
        // degree-4 hub 0 with four 2-paths back to vertex 5
        let g = OrientedGraph::from_arcs(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
        let r = discharge_run(&g);
        assert_eq!(r.charge[0], Rational::integer(2));
        assert_eq!(r.charge[1], Rational::integer(3));
        assert!(r.conserved());
        assert_eq!(r.below_three(), vec![0, 5]);
    }
}
