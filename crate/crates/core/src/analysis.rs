//! Membership verdicts for the class and its subclasses, planarity and
//! treewidth, all read off the leaves of the decomposition tree.

use serde::{Deserialize, Serialize};

use crate::basic::{classify_daisy, recognize_basic, BasicKind, DaisyClass};
use crate::decompose::{decompose, DecompositionTree};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::width::{exact_width, TreeRepresentation, WidthClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafCertificate {
    pub node: usize,
    /// Vertices of the input graph, indexed by leaf-local id.
    pub vertices: Vec<usize>,
    /// The leaf's kind in leaf-local ids.
    pub kind: BasicKind,
    pub daisy: Option<DaisyClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rejection {
    NonBasicLeaf { node: usize, vertices: Vec<usize> },
    BudgetExceeded { limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificates {
    Accepted { leaves: Vec<LeafCertificate> },
    Rejected(Rejection),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub n: usize,
    pub m: usize,
    pub ttw_free: bool,
    pub even_wheel_free: bool,
    pub even_hole_free: bool,
    pub bipartite_theta_wac_free: bool,
    /// Present only for members of the class.
    pub planar: Option<bool>,
    /// Present only for members of the class.
    pub treewidth: Option<usize>,
    pub tree_nodes: Option<usize>,
    pub certificates: Certificates,
}

/// Everything computed along the way, for callers that need more than the
/// report.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: ClassReport,
    pub tree: Option<DecompositionTree>,
    pub width: Option<(WidthClass, TreeRepresentation)>,
}

fn leaf_certificates(t: &DecompositionTree) -> std::result::Result<Vec<LeafCertificate>, Rejection> {
    t.leaves()
        .map(|(id, node)| match recognize_basic(&node.graph) {
            Some(kind) => {
                let daisy = match &kind {
                    BasicKind::Daisy(d) => Some(classify_daisy(d)),
                    _ => None,
                };
                Ok(LeafCertificate { node: id, vertices: node.to_root.clone(), kind, daisy })
            }
            None => Err(Rejection::NonBasicLeaf { node: id, vertices: node.to_root.clone() }),
        })
        .collect()
}

fn is_full_odd_daisy(kind: &BasicKind) -> bool {
    matches!(kind, BasicKind::Daisy(d) if d.is_full() && d.k() % 2 == 1)
}

/// Planarity of a member: false iff some leaf is a full odd daisy.
pub fn planarity_verdict(t: &DecompositionTree) -> Result<bool> {
    let leaves = leaf_certificates(t).map_err(|r| Error::NotInClass(format!("{r:?}")))?;
    Ok(!leaves.iter().any(|l| is_full_odd_daisy(&l.kind)))
}

pub fn analyze(g: &Graph) -> Result<ClassReport> {
    analyze_full(g).map(|a| a.report)
}

pub fn analyze_full(g: &Graph) -> Result<Analysis> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let rejected = |r: Rejection, tree: Option<DecompositionTree>| Analysis {
        report: ClassReport {
            n: g.n(),
            m: g.edge_count(),
            ttw_free: false,
            even_wheel_free: false,
            even_hole_free: false,
            bipartite_theta_wac_free: false,
            planar: None,
            treewidth: None,
            tree_nodes: tree.as_ref().map(DecompositionTree::len),
            certificates: Certificates::Rejected(r),
        },
        tree,
        width: None,
    };
    let tree = match decompose(g) {
        Ok(t) => t,
        Err(Error::BudgetExceeded { limit }) => return Ok(rejected(Rejection::BudgetExceeded { limit }, None)),
        Err(e) => return Err(e),
    };
    let leaves = match leaf_certificates(&tree) {
        Ok(l) => l,
        Err(r) => return Ok(rejected(r, Some(tree))),
    };
    let daisy_ok = |f: fn(&DaisyClass) -> bool| leaves.iter().all(|l| l.daisy.as_ref().is_none_or(f));
    let even_wheel_free = daisy_ok(|d| d.even_wheel_free);
    let even_hole_free = daisy_ok(|d| d.even_hole_free) && !leaves.iter().any(|l| matches!(l.kind, BasicKind::Cube(_)));
    let bipartite = daisy_ok(|d| d.bipartite);
    let planar = !leaves.iter().any(|l| is_full_odd_daisy(&l.kind));
    let (class, rep) = exact_width(g, &tree)?;
    Ok(Analysis {
        report: ClassReport {
            n: g.n(),
            m: g.edge_count(),
            ttw_free: true,
            even_wheel_free,
            even_hole_free,
            bipartite_theta_wac_free: bipartite,
            planar: Some(planar),
            treewidth: Some(rep.width()),
            tree_nodes: Some(tree.len()),
            certificates: Certificates::Accepted { leaves },
        },
        tree: Some(tree),
        width: Some((class, rep)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{find_pattern, PatternKind};
    use crate::synthesis::families;

    #[test]
    fn c6_report() {
        let r = analyze(&Graph::cycle(6)).unwrap();
        assert!(r.ttw_free && r.even_wheel_free && r.bipartite_theta_wac_free);
        assert!(!r.even_hole_free);
        assert_eq!(r.planar, Some(true));
        assert_eq!(r.treewidth, Some(2));
    }

    #[test]
    fn full_daisy_report() {
        let r = analyze(&families::full_daisy(5).0).unwrap();
        assert!(r.ttw_free);
        assert_eq!(r.planar, Some(false));
        assert_eq!(r.treewidth, Some(4));
        let t = decompose(&families::full_daisy(6).0).unwrap();
        assert_eq!(planarity_verdict(&t), Ok(true));
    }

    #[test]
    fn petersen_rejected() {
        let p = families::petersen();
        let r = analyze(&p).unwrap();
        assert!(!r.ttw_free);
        assert!(matches!(r.certificates, Certificates::Rejected(_)));
        assert_eq!(r.treewidth, None);
        assert!(find_pattern(&p, PatternKind::Theta).unwrap().is_some());
    }

    #[test]
    fn cube_is_not_even_hole_free() {
        let r = analyze(&families::cube()).unwrap();
        assert!(r.ttw_free && r.even_wheel_free && r.bipartite_theta_wac_free);
        assert!(!r.even_hole_free);
        assert_eq!(r.treewidth, Some(3));
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert_eq!(analyze(&Graph::empty(0)), Err(Error::EmptyGraph));
    }
}
