//! A worked example: four rooted 3-uniform hypertrees on 22 vertices, and its code.

use crate::codec::ForestCode;
use crate::hypergraph::RootedForest;
use crate::shape::ForestShape;

pub fn four_tree_forest() -> RootedForest {
    let edges = vec![
        vec![1, 21, 22],
        vec![2, 17, 18],
        vec![3, 13, 19],
        vec![4, 8, 18],
        vec![4, 12, 14],
        vec![6, 7, 13],
        vec![7, 20, 21],
        vec![10, 13, 15],
        vec![11, 18, 21],
    ];
    RootedForest::from_parts(22, 3, edges, vec![5, 9, 13, 16]).expect("example forest is valid")
}

pub fn four_tree_code() -> ForestCode {
    ForestCode::new(
        ForestShape::new(3, 9, 3).expect("valid shape"),
        vec![5, 9, 13, 16],
        Some(13),
        vec![
            vec![1, 22],
            vec![2, 17],
            vec![3, 19],
            vec![4, 8],
            vec![6, 7],
            vec![10, 15],
            vec![11, 18],
            vec![12, 14],
            vec![20, 21],
        ],
        vec![21, 18, 13, 13, 4, 18, 21, 7],
    )
}
