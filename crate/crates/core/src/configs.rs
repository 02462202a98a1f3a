//! Matching the unavoidable configurations for graphs with `mad < 3`.
//!
//! Configurations are matched on the underlying graph. Black vertices must
//! have exactly the depicted degree; white vertices are unconstrained and
//! may coincide with each other.

use std::fmt;

use crate::bits::{bit, bits};
use crate::graph::OrientedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MadConfig {
    /// A vertex of degree at most 1.
    I,
    /// Two adjacent degree-2 vertices.
    II,
    /// A degree-3 vertex adjacent to a degree-2 vertex.
    III,
    /// A degree-4 vertex with at least three degree-2 neighbours.
    IV,
    /// A degree-5 vertex with at least four degree-2 neighbours.
    V,
}

impl MadConfig {
    pub const ALL: [MadConfig; 5] = [MadConfig::I, MadConfig::II, MadConfig::III, MadConfig::IV, MadConfig::V];
}

impl fmt::Display for MadConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MadConfig::I => "i",
            MadConfig::II => "ii",
            MadConfig::III => "iii",
            MadConfig::IV => "iv",
            MadConfig::V => "v",
        };
        f.write_str(s)
    }
}

/// A matched configuration. `black` lists the black vertices with the
/// centre first; `white` lists the white vertices in figure order (entries
/// may repeat when white vertices coincide).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigMatch {
    pub config: MadConfig,
    pub black: Vec<usize>,
    pub white: Vec<usize>,
}

fn other_nbr(g: &OrientedGraph, v: usize, not: usize) -> usize {
    (g.nbrs(v) & !bit(not)).trailing_zeros() as usize
}

fn match_at(g: &OrientedGraph, c: MadConfig, v: usize) -> Option<ConfigMatch> {
    let deg = |x: usize| g.degree(x);
    let two_nbrs = |x: usize| bits(g.nbrs(x)).filter(|&y| deg(y) == 2).collect::<Vec<_>>();
    match c {
        MadConfig::I => (deg(v) <= 1).then(|| ConfigMatch {
            config: c,
            black: vec![v],
            white: bits(g.nbrs(v)).collect(),
        }),
        MadConfig::II => {
            if deg(v) != 2 {
                return None;
            }
            let w = bits(g.nbrs(v)).find(|&w| deg(w) == 2 && w > v)?;
            Some(ConfigMatch {
                config: c,
                black: vec![v, w],
                white: vec![other_nbr(g, v, w), other_nbr(g, w, v)],
            })
        }
        MadConfig::III => {
            if deg(v) != 3 {
                return None;
            }
            let w = *two_nbrs(v).first()?;
            let mut white: Vec<usize> = bits(g.nbrs(v) & !bit(w)).collect();
            white.push(other_nbr(g, w, v));
            Some(ConfigMatch {
                config: c,
                black: vec![v, w],
                white,
            })
        }
        MadConfig::IV | MadConfig::V => {
            let (d, need) = if c == MadConfig::IV { (4, 3) } else { (5, 4) };
            if deg(v) != d {
                return None;
            }
            let twos = two_nbrs(v);
            if twos.len() < need {
                return None;
            }
            let spokes = &twos[..need];
            let spoke_mask = spokes.iter().fold(0, |m, &s| m | bit(s));
            let mut white: Vec<usize> = bits(g.nbrs(v) & !spoke_mask).collect();
            white.extend(spokes.iter().map(|&s| other_nbr(g, s, v)));
            let mut black = vec![v];
            black.extend_from_slice(spokes);
            Some(ConfigMatch {
                config: c,
                black,
                white,
            })
        }
    }
}

/// First configuration found, scanning configurations in order (i)..(v) and
/// vertices by increasing index within each.
pub fn find_configuration(g: &OrientedGraph) -> Option<ConfigMatch> {
    MadConfig::ALL
        .iter()
        .find_map(|&c| (0..g.n()).find_map(|v| match_at(g, c, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builtin;

    fn cycle(n: usize) -> OrientedGraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        OrientedGraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn pendant_vertex_is_config_i() {
        let g = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (3, 0)]).unwrap();
        let m = find_configuration(&g).unwrap();
        assert_eq!(m.config, MadConfig::I);
        assert_eq!((m.black, m.white), (vec![3], vec![0]));
    }

    #[test]
    fn five_cycle_is_config_ii() {
        let m = find_configuration(&cycle(5)).unwrap();
        assert_eq!(m.config, MadConfig::II);
        assert_eq!(m.black, vec![0, 1]);
        assert_eq!(m.white, vec![4, 2]);
    }

    #[test]
    fn theta_graph_has_config_iii() {
        // two degree-3 vertices joined by three paths of length 2
        let g = OrientedGraph::from_arcs(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        let m = find_configuration(&g).unwrap();
        assert_eq!(m.config, MadConfig::III);
        assert_eq!(m.black, vec![0, 2]);
        assert_eq!(m.white, vec![3, 4, 1]);
    }

    #[test]
    fn cubic_graphs_have_none() {
        assert!(find_configuration(&builtin("fig2i").unwrap()).is_none());
        assert!(find_configuration(&builtin("k4").unwrap()).is_none());
    }

    #[test]
    fn subdivided_k5_hub_is_config_iv() {
        // K5 with each edge subdivided: hubs of degree 4, every neighbour of
        // degree 2 whose other end is a hub.
        let mut arcs = Vec::new();
        let mut next = 5;
        for a in 0..5 {
            for b in a + 1..5 {
                arcs.push((a, next));
                arcs.push((next, b));
                next += 1;
            }
        }
        let g = OrientedGraph::from_arcs(next, &arcs).unwrap();
        let m = find_configuration(&g).unwrap();
        assert_eq!(m.config, MadConfig::IV);
        assert_eq!(m.black[0], 0);
        assert_eq!(m.black.len(), 4);
    }
}
