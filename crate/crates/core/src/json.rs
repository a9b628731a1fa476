//! Body JSON schema: serialization and parsing of composition trees.
//!
//! Leaves: `{"kind":"ball_intersection","dim":2,"balls":[{"center":[..],"radius":r},..]}`.
//! Operators: `{"kind":"scale","t":..,"body":{..}}`, `{"kind":"negate","body":{..}}`,
//! `{"kind":"sum","a":{..},"b":{..}}`, `{"kind":"rotate","alpha":..,"body":{..}}`,
//! `{"kind":"project","body":{..}}`. Numbers are IEEE doubles in shortest
//! round-trip decimal form. Parsing re-certifies that every leaf intersection
//! is nonempty.

use serde::{Deserialize, Serialize};

use crate::body::{Ball, Body, Node};
use crate::error::{Error, Result};
use crate::vec::{Dim, Point};

#[derive(Serialize, Deserialize)]
struct BallSchema {
    center: Vec<f64>,
    radius: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum BodySchema {
    BallIntersection { dim: u8, balls: Vec<BallSchema> },
    Scale { t: f64, body: Box<BodySchema> },
    Negate { body: Box<BodySchema> },
    Sum { a: Box<BodySchema>, b: Box<BodySchema> },
    Rotate { alpha: f64, body: Box<BodySchema> },
    Project { body: Box<BodySchema> },
}

fn to_schema(node: &Node) -> BodySchema {
    match node {
        Node::Balls { dim, balls } => BodySchema::BallIntersection {
            dim: dim.len() as u8,
            balls: balls
                .iter()
                .map(|b| BallSchema { center: b.center.coords().to_vec(), radius: b.radius })
                .collect(),
        },
        Node::Scale { t, inner } => {
            BodySchema::Scale { t: *t, body: Box::new(to_schema(inner)) }
        }
        Node::Negate { inner } => BodySchema::Negate { body: Box::new(to_schema(inner)) },
        Node::Sum { left, right } => BodySchema::Sum {
            a: Box::new(to_schema(left)),
            b: Box::new(to_schema(right)),
        },
        Node::Rotate { alpha, inner } => {
            BodySchema::Rotate { alpha: *alpha, body: Box::new(to_schema(inner)) }
        }
        Node::Project { inner } => BodySchema::Project { body: Box::new(to_schema(inner)) },
    }
}

fn from_schema(schema: BodySchema) -> Result<Body> {
    match schema {
        BodySchema::BallIntersection { dim, balls } => {
            let dim = Dim::from_len(dim as usize)
                .ok_or_else(|| Error::invalid(format!("unsupported dimension {dim}")))?;
            let balls = balls
                .into_iter()
                .map(|b| {
                    if b.center.len() != dim.len() {
                        return Err(Error::invalid("ball center length does not match dim"));
                    }
                    Ball::new(Point::new(&b.center)?, b.radius)
                })
                .collect::<Result<Vec<_>>>()?;
            Body::ball_intersection(dim, balls)
        }
        BodySchema::Scale { t, body } => from_schema(*body)?.scale(t),
        BodySchema::Negate { body } => Ok(from_schema(*body)?.negate()),
        BodySchema::Sum { a, b } => Body::sum(from_schema(*a)?, from_schema(*b)?),
        BodySchema::Rotate { alpha, body } => from_schema(*body)?.rotate(alpha),
        BodySchema::Project { body } => from_schema(*body)?.project(),
    }
}

/// Serializes a body to its JSON schema.
pub fn to_json(body: &Body) -> String {
    serde_json::to_string(&to_schema(body.node())).expect("body schema serialization is total")
}

/// Parses a body from its JSON schema, re-validating every constructor
/// invariant (dimensions, parameter ranges, nonempty leaf intersections).
pub fn from_json(text: &str) -> Result<Body> {
    let schema: BodySchema = serde_json::from_str(text)
        .map_err(|e| Error::invalid(format!("invalid body JSON: {e}")))?;
    from_schema(schema)
}
