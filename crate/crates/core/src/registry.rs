//! Worked examples with frozen outputs, replayable through the construction pipeline.

use serde::Serialize;

use crate::constructions::{construct, Anchors, ConstructionParams, Variant};
use crate::error::Result;
use crate::sequence::RingSequence;

const S5: &[u32] = &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExampleRecord {
    pub name: &'static str,
    pub description: &'static str,
    pub variant: Variant,
    pub q: u32,
    pub q_prime: u32,
    pub anchors: Option<Anchors>,
    pub starter: &'static [u32],
    pub expected: &'static [u32],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleOutcome {
    pub name: &'static str,
    pub matches: bool,
    pub produced: Vec<u32>,
}

impl ExampleRecord {
    pub fn params(&self) -> ConstructionParams {
        ConstructionParams {
            q: self.q,
            q_prime: self.q_prime,
            n: 2,
            anchors: self.anchors,
            variant: self.variant,
        }
    }

    pub fn replay(&self) -> Result<RingSequence> {
        let starter = RingSequence::new(self.q, self.starter.to_vec())?;
        construct(&self.params(), Some(&starter))
    }

    pub fn check(&self) -> Result<ExampleOutcome> {
        let produced = self.replay()?.into_terms();
        Ok(ExampleOutcome {
            name: self.name,
            matches: produced == self.expected,
            produced,
        })
    }
}

pub const EXAMPLES: [ExampleRecord; 8] = [
    ExampleRecord {
        name: "s2_9",
        description: "S'' over Z_9 from a maximal OS_5(2)",
        variant: Variant::S2,
        q: 5,
        q_prime: 9,
        anchors: None,
        starter: S5,
        expected: &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 8, 7, 6, 5, 0, 7, 5, 8, 6],
    },
    ExampleRecord {
        name: "s2_10",
        description: "S'' over Z_10 from a maximal OS_5(2)",
        variant: Variant::S2,
        q: 5,
        q_prime: 10,
        anchors: None,
        starter: S5,
        expected: &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 9, 8, 7, 6, 0, 8, 6, 9, 7],
    },
    ExampleRecord {
        name: "t_10",
        description: "T over Z_10, zero-free",
        variant: Variant::T,
        q: 5,
        q_prime: 10,
        anchors: None,
        starter: S5,
        expected: &[5, 1, 8, 3, 6, 5, 8, 4, 9, 3],
    },
    ExampleRecord {
        name: "t2_10",
        description: "T' over Z_10, good with weight zero",
        variant: Variant::T2,
        q: 5,
        q_prime: 10,
        anchors: None,
        starter: S5,
        expected: &[5, 1, 8, 3, 6, 5, 8, 4, 9, 3, 5, 9, 2, 7, 4, 5, 2, 6, 1, 7],
    },
    ExampleRecord {
        name: "sos_11_2",
        description: "U = S'' || T' over Z_11, period 40",
        variant: Variant::U,
        q: 5,
        q_prime: 11,
        anchors: None,
        starter: S5,
        expected: &[
            0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 10, 9, 8, 7, 0, 9, 7, 10, 8, 6, 1, 9, 3, 7, 5, 9, 4,
            10, 3, 5, 10, 2, 8, 4, 6, 2, 7, 1, 8,
        ],
    },
    ExampleRecord {
        name: "ustar_11",
        description: "U* over Z_11 with anchors (2, 3, 4), period 37 and weight 2",
        variant: Variant::UStar,
        q: 5,
        q_prime: 11,
        anchors: Some(Anchors { x: 2, y: 3, z: 4 }),
        starter: &[0, 2, 3, 4, 2, 1, 0, 3, 1, 4],
        expected: &[
            0, 2, 1, 0, 3, 1, 4, 0, 9, 8, 7, 9, 10, 0, 8, 10, 7, 6, 2, 8, 4, 9, 1, 6, 3, 10, 4, 5,
            9, 3, 7, 2, 10, 5, 8, 1, 7,
        ],
    },
    ExampleRecord {
        name: "uprime_12",
        description: "U' over Z_12, every zero of U replaced by 6",
        variant: Variant::UPrime,
        q: 5,
        q_prime: 12,
        anchors: None,
        starter: S5,
        expected: &[
            6, 1, 2, 3, 4, 6, 2, 4, 1, 3, 6, 11, 10, 9, 8, 6, 10, 8, 11, 9, 7, 1, 10, 3, 8, 5, 10,
            4, 11, 3, 5, 11, 2, 9, 4, 7, 2, 8, 1, 9,
        ],
    },
    ExampleRecord {
        name: "ustarstar_12",
        description: "U** over Z_12, good with period 37 and weight 1",
        variant: Variant::UStarStar,
        q: 5,
        q_prime: 12,
        anchors: None,
        starter: &[0, 1, 4, 0, 2, 1, 3, 4, 2, 3],
        expected: &[
            6, 2, 1, 3, 4, 2, 3, 6, 11, 8, 6, 10, 11, 9, 8, 10, 9, 7, 1, 8, 5, 10, 1, 9, 4, 10, 3,
            5, 11, 4, 7, 2, 11, 3, 8, 2, 9,
        ],
    },
];

pub fn find(name: &str) -> Option<&'static ExampleRecord> {
    EXAMPLES.iter().find(|e| e.name == name)
}
