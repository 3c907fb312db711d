mod common;

use cds2m::graph::{load_solution, save_solution};
use cds2m::greedy::GreedyParams;
use cds2m::{exact_minimum, grasp_solve, grc_solve, verify, Graph, GraspParams, InstanceSpec};

#[test]
fn solutions_survive_a_file_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::generate_random(&InstanceSpec::new(20, 40, 11).unwrap());
    let graph_path = dir.path().join("v20_d40.txt");
    g.save(&graph_path).unwrap();
    let loaded = Graph::load(&graph_path).unwrap();
    assert_eq!(loaded, g);

    let sol = grc_solve(&loaded, 1, 500).expect("feasible");
    let sol_path = dir.path().join("v20_d40.sol");
    save_solution(&sol.nodes, &sol_path).unwrap();
    let nodes = load_solution(&sol_path, g.node_count()).unwrap();
    assert_eq!(nodes, sol.nodes);
    assert!(verify(&g, &nodes, 1).is_feasible);
}

#[test]
fn grasp_and_grc_agree_with_the_oracle_on_small_instances() {
    let mut checked = 0;
    for seed in 0..25u64 {
        let g = Graph::generate_random(&InstanceSpec::new(10, 45, seed).unwrap());
        for m in 1..=2 {
            let exact = exact_minimum(&g, m, 16).unwrap();
            let params = GraspParams::new(GreedyParams::new(m, 500, 1.25).unwrap(), 200, seed);
            let (best, stats) = grasp_solve(&g, &params).unwrap();
            let grc = grc_solve(&g, m, 500);
            assert_eq!(stats.iterations_run, 200);
            match exact {
                None => assert!(best.is_none() && grc.is_none()),
                Some(opt) => {
                    for nodes in best.iter().chain(grc.iter()).map(|s| &s.nodes) {
                        assert!(common::feasible(&g, nodes, m));
                        assert!(nodes.len() >= opt.len());
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 10);
}

#[test]
fn complete_graphs_need_max_of_three_and_m() {
    // Every outside node of K_n sees all k chosen nodes, so k >= max(3, m).
    for n in 4..=10 {
        let g = Graph::complete(n);
        for m in 1..n {
            let sol = grc_solve(&g, m, 500).unwrap();
            assert_eq!(sol.size(), m.max(3), "K{n}, m = {m}");
        }
    }
}
