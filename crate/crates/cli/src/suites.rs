//! The exact verification suites as JSON ledgers.

use octahedral::gl2f9::{
    g_groups, gl2_orders, s4_conjugacy, verify_outer_involutions, verify_lifting_groups, ConjugacyReport, MatGroup,
};
use octahedral::qcurve::symbolic_suite;
use octahedral::check::SuiteReport;
use serde::Serialize;

use crate::SCHEMA;

#[derive(Debug, Serialize)]
pub struct SuiteLedger {
    pub schema: u32,
    pub passed: bool,
    pub suite: SuiteReport,
}

pub fn symbolic() -> SuiteLedger {
    let suite = symbolic_suite();
    SuiteLedger {
        schema: SCHEMA,
        passed: suite.all_passed(),
        suite,
    }
}

#[derive(Debug, Serialize)]
pub struct GroupRow {
    pub group: usize,
    pub order: usize,
    pub sl2_order: usize,
    pub label: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct MapRow {
    pub group: usize,
    pub map: String,
    pub expected: bool,
    pub automorphism: bool,
    pub inner: bool,
    pub square_inner: bool,
}

#[derive(Debug, Serialize)]
pub struct Gl2Ledger {
    pub schema: u32,
    pub passed: bool,
    pub gl2_order: usize,
    pub sl2_order: usize,
    pub groups: Vec<GroupRow>,
    pub group_checks: SuiteReport,
    pub outer_maps: Vec<MapRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugacy: Option<ConjugacyReport>,
}

fn group_row(n: usize, g: &MatGroup) -> GroupRow {
    let (order, sl2_order) = (g.order(), g.sl2_order());
    GroupRow {
        group: n,
        order,
        sl2_order,
        label: octahedral::gl2f9::label_from_orders(order, sl2_order).map(|l| l.to_string()),
    }
}

pub fn gl2f9(conjugacy: bool) -> Gl2Ledger {
    let (gl2_order, sl2_order) = gl2_orders();
    let groups: Vec<GroupRow> = g_groups().iter().enumerate().map(|(i, g)| group_row(i + 1, g)).collect();
    let group_checks = verify_lifting_groups();
    let mut outer_maps = Vec::new();
    let mut maps_ok = true;
    for n in 1..=5 {
        let rep = verify_outer_involutions(n);
        maps_ok &= rep.passed();
        for (map, c) in &rep.checks {
            outer_maps.push(MapRow {
                group: n,
                map: map.to_string(),
                expected: rep.expected.contains(map),
                automorphism: c.automorphism,
                inner: c.inner,
                square_inner: c.square_inner,
            });
        }
    }
    let conjugacy = conjugacy.then(s4_conjugacy);
    let conj_ok = conjugacy.as_ref().is_none_or(|c| c.classes == 1 && c.s4_subgroups > 0);
    Gl2Ledger {
        schema: SCHEMA,
        passed: group_checks.all_passed() && maps_ok && conj_ok && (gl2_order, sl2_order) == (5760, 720),
        gl2_order,
        sl2_order,
        groups,
        group_checks,
        outer_maps,
        conjugacy,
    }
}
