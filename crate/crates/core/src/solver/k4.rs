//! Exhaustive check of the statement that a labeling of `K_4` with labels in
//! `{1, 2, 3}` is product-irregular exactly when some vertex has degree 6.

use crate::graph::{complete_graph, EdgeLabeling};
use crate::verifier::{is_product_irregular, ProductDegree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4Characterization {
    pub labelings: usize,
    pub irregular: usize,
    /// Every irregular labeling has a vertex of degree `(1,1)`.
    pub forward_holds: bool,
    /// Every labeling with a `(1,1)` vertex is irregular.
    pub converse_holds: bool,
    /// Labelings violating either direction, in enumeration order.
    pub counterexamples: Vec<EdgeLabeling>,
}

impl K4Characterization {
    pub fn holds(&self) -> bool {
        self.forward_holds && self.converse_holds
    }
}

pub fn k4_characterization() -> K4Characterization {
    let k4 = complete_graph(4).expect("K4");
    let six = ProductDegree::of_label(6);
    let mut report = K4Characterization {
        labelings: 0,
        irregular: 0,
        forward_holds: true,
        converse_holds: true,
        counterexamples: Vec::new(),
    };
    for code in 0..3usize.pow(6) {
        let labels: Vec<u32> = (0..6)
            .map(|e| (code / 3usize.pow(e)) as u32 % 3 + 1)
            .collect();
        let lab = EdgeLabeling::new(k4.clone(), labels).expect("six positive labels");
        let r = is_product_irregular(&lab).expect("K4 has no isolated vertex");
        let has_six = r.degrees.contains(&six);
        report.labelings += 1;
        if r.ok {
            report.irregular += 1;
        }
        if r.ok && !has_six {
            report.forward_holds = false;
        }
        if has_six && !r.ok {
            report.converse_holds = false;
        }
        if r.ok != has_six {
            report.counterexamples.push(lab);
        }
    }
    report
}

/// Whether the biconditional holds over all 729 labelings.
pub fn verify_k4_characterization() -> bool {
    k4_characterization().holds()
}
