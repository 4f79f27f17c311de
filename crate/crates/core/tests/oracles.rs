mod common;

use netdiag::{diagnosability, edge_tolerable_diagnosability, pmc_diagnosability_by_core, DiagModel, Strategy, TopologyKind};

#[test]
fn core_formula_matches_pair_enumeration() {
    let corpus = common::corpus(40);
    assert!(corpus.len() >= 50);
    for (name, g) in &corpus {
        assert_eq!(
            pmc_diagnosability_by_core(g).unwrap(),
            diagnosability(g, DiagModel::Pmc).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn diagnosability_matches_the_syndrome_oracle() {
    for (name, g) in common::corpus(40).iter().filter(|(_, g)| g.vertex_count() <= 12) {
        let adj = common::masks(g);
        for model in DiagModel::ALL {
            assert_eq!(
                diagnosability(g, model).unwrap(),
                common::brute_diagnosability(&adj, model),
                "{name} {model}"
            );
        }
    }
}

#[test]
fn exhaustive_edge_tolerance_matches_the_oracle() {
    let mut graphs: Vec<(String, netdiag::Graph)> = vec![("BH_1".into(), TopologyKind::BalancedHypercube { n: 1 }.build().unwrap())];
    graphs.extend((3..=6).map(|m| (format!("C_{m}"), TopologyKind::Cycle { m }.build().unwrap())));
    graphs.extend((3..=6).map(|n| (format!("P_{n}"), common::path(n))));
    graphs.push(("Q_2".into(), TopologyKind::Hypercube { n: 2 }.build().unwrap()));
    graphs.extend((0..6).map(|i| (format!("G(7,0.4)#{i}"), common::random_graph(7, 0.4, 50 + i))));
    for (name, g) in &graphs {
        if g.edge_count() > 14 {
            continue;
        }
        for model in DiagModel::ALL {
            for h in 0..=g.edge_count().min(3) {
                let report = edge_tolerable_diagnosability(g, h, model, Strategy::Exhaustive).unwrap();
                assert_eq!(report.value, Some(common::brute_edge_tolerable(g, h, model)), "{name} {model} h={h}");
                let cert = report.certificate.expect("exhaustive runs carry a certificate");
                assert!(cert.fe.len() <= h);
                assert_eq!(cert.max_size(), report.value.unwrap() + 1);
                assert!(cert.revalidate(g, model).unwrap(), "{name} {model} h={h}");
            }
        }
    }
}

fn exhaustive_values(kind: TopologyKind, model: DiagModel, hs: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    let g = kind.build().unwrap();
    hs.map(|h| edge_tolerable_diagnosability(&g, h, model, Strategy::Exhaustive).unwrap().value.unwrap())
        .collect()
}

#[test]
fn hypercube_q3_under_pmc() {
    assert_eq!(exhaustive_values(TopologyKind::Hypercube { n: 3 }, DiagModel::Pmc, 0..=3), vec![3, 2, 1, 0]);
}

#[test]
fn exceptional_graphs_under_mm_star() {
    assert_eq!(exhaustive_values(TopologyKind::G8, DiagModel::MmStar, 0..=3), vec![2, 2, 1, 0]);
    assert_eq!(exhaustive_values(TopologyKind::Crown { k: 3 }, DiagModel::MmStar, 0..=3), vec![2, 2, 1, 0]);
}
