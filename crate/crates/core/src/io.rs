//! Text formats: the JSON game document and the edge-list graph format.
//!
//! Game document:
//!
//! ```json
//! {
//!   "agents": ["a1", "a2"],
//!   "goals": ["g1"],
//!   "resources": ["r1"],
//!   "agent_goals": {"a1": ["g1"], "a2": ["g1"]},
//!   "endowment": {"a1": {"r1": 1}},
//!   "requirement": {"g1": {"r1": "inf"}},
//!   "coalitions": {"C": ["a1"]},
//!   "bounds": {"b": {"r1": 3}},
//!   "goal_sets": {"G0": ["g1"]}
//! }
//! ```
//!
//! Omitted endowment and requirement entries are 0, omitted bound entries are
//! `"inf"`, and agents missing from `agent_goals` have no goals. The canonical
//! serialization writes every entry, sorts object keys, and keeps arrays in
//! declaration order.
//!
//! Graph edge list: a header line `n m`, then `m` lines `u v` with 1-based
//! vertex indices. Blank lines and lines starting with `#` are skipped.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{CrgError, Result};
use crate::game::{Coalition, Game, GameParts, GoalSet, ResourceBound};
use crate::problems::Query;
use crate::quantity::Quantity;
use crate::reductions::Graph;

/// A game plus named auxiliary arguments for queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameDocument {
    pub game: Game,
    pub coalitions: BTreeMap<String, Coalition>,
    pub bounds: BTreeMap<String, ResourceBound>,
    pub goal_sets: BTreeMap<String, GoalSet>,
}

impl GameDocument {
    pub fn new(game: Game) -> Self {
        GameDocument {
            game,
            coalitions: BTreeMap::new(),
            bounds: BTreeMap::new(),
            goal_sets: BTreeMap::new(),
        }
    }
}

/// `game` with the arguments of `query` stored as named auxiliaries:
/// coalitions `C` (and `C2`), goal set `G0`, bound `b`.
pub fn query_document(game: Game, query: &Query) -> GameDocument {
    let mut doc = GameDocument::new(game);
    let mut coalition = |name: &str, c: &Coalition| {
        doc.coalitions.insert(name.to_string(), c.clone());
    };
    match query {
        Query::Esck { .. } => {}
        Query::Sc { coalition: c }
        | Query::Maxc { coalition: c }
        | Query::Maxsc { coalition: c }
        | Query::Nr { coalition: c, .. }
        | Query::Snr { coalition: c, .. } => coalition("C", c),
        Query::Cgro { coalition: c, goal_set, .. } | Query::Rpegs { coalition: c, goal_set } => {
            coalition("C", c);
            doc.goal_sets.insert("G0".into(), goal_set.clone());
        }
        Query::Scrb { coalition: c, bound } => {
            coalition("C", c);
            doc.bounds.insert("b".into(), bound.clone());
        }
        Query::Cc { first, second, bound } => {
            coalition("C", first);
            coalition("C2", second);
            doc.bounds.insert("b".into(), bound.clone());
        }
    }
    doc
}

const TOP_LEVEL_KEYS: [&str; 9] = [
    "agents",
    "goals",
    "resources",
    "agent_goals",
    "endowment",
    "requirement",
    "coalitions",
    "bounds",
    "goal_sets",
];

fn field_error(path: &str, message: impl Into<String>) -> CrgError {
    CrgError::parse(path, message)
}

fn object<'a>(value: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| field_error(path, "expected an object"))
}

fn string_list(value: &Value, path: &str) -> Result<Vec<String>> {
    let arr = value.as_array().ok_or_else(|| field_error(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| field_error(&format!("{path}[{i}]"), "expected a string identifier"))
        })
        .collect()
}

fn lookup(ids: &[String], id: &str, kind: &str, path: &str) -> Result<usize> {
    ids.iter()
        .position(|x| x == id)
        .ok_or_else(|| field_error(path, format!("unknown {kind} `{id}`")))
}

fn quantity(value: &Value, path: &str, allow_infinite: bool) -> Result<Quantity> {
    match value {
        Value::String(s) if s == "inf" => {
            if allow_infinite {
                Ok(Quantity::Infinite)
            } else {
                Err(field_error(path, "infinite endowment"))
            }
        }
        Value::Number(n) => {
            if let Some(v) = n.as_u64() {
                Ok(Quantity::Finite(v))
            } else if n.as_i64().is_some_and(|v| v < 0) || n.as_f64().is_some_and(|v| v < 0.0) {
                Err(field_error(path, format!("negative value {n}")))
            } else {
                Err(field_error(path, format!("{n} is not a non-negative integer")))
            }
        }
        other => Err(field_error(path, format!("expected an integer or \"inf\", got {other}"))),
    }
}

/// Reads `{row_id: {resource_id: value}}` into a dense matrix, defaulting to `default`.
fn matrix(
    value: Option<&Value>,
    field: &str,
    rows: &[String],
    row_kind: &str,
    resources: &[String],
    default: Quantity,
    allow_infinite: bool,
) -> Result<Vec<Vec<Quantity>>> {
    let mut out = vec![vec![default; resources.len()]; rows.len()];
    let Some(value) = value else { return Ok(out) };
    for (row_id, entries) in object(value, field)? {
        let row_path = format!("{field}.{row_id}");
        let i = lookup(rows, row_id, row_kind, &row_path)?;
        for (res_id, v) in object(entries, &row_path)? {
            let path = format!("{row_path}.{res_id}");
            let r = lookup(resources, res_id, "resource", &path)?;
            out[i][r] = quantity(v, &path, allow_infinite)?;
        }
    }
    Ok(out)
}

fn index_list(value: &Value, ids: &[String], kind: &str, path: &str) -> Result<Vec<usize>> {
    string_list(value, path)?
        .iter()
        .enumerate()
        .map(|(i, id)| lookup(ids, id, kind, &format!("{path}[{i}]")))
        .collect()
}

/// Parses and validates a game document.
pub fn parse_game(text: &str) -> Result<GameDocument> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        CrgError::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let top = object(&root, "document")?;
    if let Some(key) = top.keys().find(|k| !TOP_LEVEL_KEYS.contains(&k.as_str())) {
        return Err(field_error(key, "unknown field"));
    }
    let required = |key: &str| top.get(key).ok_or_else(|| field_error(key, "missing field"));
    let agents = string_list(required("agents")?, "agents")?;
    let goals = string_list(required("goals")?, "goals")?;
    let resources = string_list(required("resources")?, "resources")?;

    let mut agent_goals = vec![GoalSet::empty(); agents.len()];
    if let Some(v) = top.get("agent_goals") {
        for (agent, list) in object(v, "agent_goals")? {
            let path = format!("agent_goals.{agent}");
            let i = lookup(&agents, agent, "agent", &path)?;
            agent_goals[i] = GoalSet::new(index_list(list, &goals, "goal", &path)?);
        }
    }
    let endowment = matrix(top.get("endowment"), "endowment", &agents, "agent", &resources, Quantity::ZERO, false)?
        .into_iter()
        .map(|row| row.into_iter().map(|q| q.finite().expect("finite by parse")).collect())
        .collect();
    let requirement = matrix(top.get("requirement"), "requirement", &goals, "goal", &resources, Quantity::ZERO, true)?;

    let game = Game::new(GameParts {
        agents: agents.clone(),
        goals: goals.clone(),
        resources: resources.clone(),
        agent_goals,
        endowment,
        requirement,
    })?;

    let mut doc = GameDocument::new(game);
    if let Some(v) = top.get("coalitions") {
        for (name, list) in object(v, "coalitions")? {
            let path = format!("coalitions.{name}");
            doc.coalitions
                .insert(name.clone(), Coalition::new(index_list(list, &agents, "agent", &path)?));
        }
    }
    if let Some(v) = top.get("goal_sets") {
        for (name, list) in object(v, "goal_sets")? {
            let path = format!("goal_sets.{name}");
            doc.goal_sets
                .insert(name.clone(), GoalSet::new(index_list(list, &goals, "goal", &path)?));
        }
    }
    if let Some(v) = top.get("bounds") {
        let names: Vec<String> = object(v, "bounds")?.keys().cloned().collect();
        let rows = matrix(Some(v), "bounds", &names, "bound", &resources, Quantity::Infinite, true)?;
        for (name, row) in names.into_iter().zip(rows) {
            doc.bounds.insert(name, ResourceBound::new(row));
        }
    }
    Ok(doc)
}

fn quantity_value(q: Quantity) -> Value {
    match q {
        Quantity::Finite(v) => json!(v),
        Quantity::Infinite => json!("inf"),
    }
}

fn names(ids: &[String], indices: impl Iterator<Item = usize>) -> Value {
    Value::Array(indices.map(|i| Value::String(ids[i].clone())).collect())
}

/// The document as a JSON value in canonical form.
pub fn game_to_value(doc: &GameDocument) -> Value {
    let game = &doc.game;
    let (agents, goals, resources) = (game.agents(), game.goals(), game.resources());
    let row = |values: Vec<Quantity>| -> Value {
        Value::Object(
            resources
                .iter()
                .cloned()
                .zip(values.into_iter().map(quantity_value))
                .collect(),
        )
    };
    let mut top = Map::new();
    top.insert("agents".into(), json!(agents));
    top.insert("goals".into(), json!(goals));
    top.insert("resources".into(), json!(resources));
    top.insert(
        "agent_goals".into(),
        Value::Object(
            (0..game.num_agents())
                .map(|i| (agents[i].clone(), names(goals, game.agent_goals(i).iter())))
                .collect(),
        ),
    );
    top.insert(
        "endowment".into(),
        Value::Object(
            (0..game.num_agents())
                .map(|i| {
                    let values = (0..game.num_resources()).map(|r| Quantity::Finite(game.endowment(i, r)));
                    (agents[i].clone(), row(values.collect()))
                })
                .collect(),
        ),
    );
    top.insert(
        "requirement".into(),
        Value::Object(
            (0..game.num_goals())
                .map(|g| {
                    let values = (0..game.num_resources()).map(|r| game.requirement(g, r));
                    (goals[g].clone(), row(values.collect()))
                })
                .collect(),
        ),
    );
    if !doc.coalitions.is_empty() {
        let v = doc.coalitions.iter().map(|(k, c)| (k.clone(), names(agents, c.iter())));
        top.insert("coalitions".into(), Value::Object(v.collect()));
    }
    if !doc.goal_sets.is_empty() {
        let v = doc.goal_sets.iter().map(|(k, gs)| (k.clone(), names(goals, gs.iter())));
        top.insert("goal_sets".into(), Value::Object(v.collect()));
    }
    if !doc.bounds.is_empty() {
        let v = doc.bounds.iter().map(|(k, b)| (k.clone(), row(b.as_slice().to_vec())));
        top.insert("bounds".into(), Value::Object(v.collect()));
    }
    Value::Object(top)
}

/// Canonical pretty-printed JSON, newline-terminated.
pub fn serialize_game(doc: &GameDocument) -> String {
    let mut s = serde_json::to_string_pretty(&game_to_value(doc)).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Parses the edge-list format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(CrgError::parse(format!("line {line}"), format!("expected two integers, got `{l}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| CrgError::parse(format!("line {line}"), format!("`{s}` is not a non-negative integer")))
        };
        Ok((parse(a)?, parse(b)?))
    };
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| CrgError::parse("line 1", "missing `n m` header"))?;
    let (n, m) = pair(header_line, header)?;
    if n == 0 {
        return Err(CrgError::parse(format!("line {header_line}"), "a graph needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines.by_ref() {
        if edges.len() == m {
            return Err(CrgError::parse(format!("line {line}"), format!("more than the declared {m} edges")));
        }
        let (u, v) = pair(line, l)?;
        let loc = format!("line {line}");
        if !(1..=n).contains(&u) || !(1..=n).contains(&v) {
            return Err(CrgError::parse(loc, format!("vertex index out of range 1..={n}")));
        }
        if u == v {
            return Err(CrgError::parse(loc, format!("self-loop on vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(CrgError::parse(loc, format!("duplicate edge {u} {v}")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(CrgError::parse(
            "end of input",
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Inverse of [`parse_graph`].
pub fn format_graph(graph: &Graph) -> String {
    let mut s = format!("{} {}\n", graph.num_vertices(), graph.edges().len());
    for &(u, v) in graph.edges() {
        s.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::game_a;

    const GAME_A: &str = r#"{
        "agents": ["a1"], "goals": ["g1"], "resources": ["r1"],
        "agent_goals": {"a1": ["g1"]},
        "endowment": {"a1": {"r1": 1}},
        "requirement": {"g1": {"r1": 1}}
    }"#;

    #[test]
    fn parses_game_a() {
        let doc = parse_game(GAME_A).unwrap();
        assert_eq!(doc.game, game_a());
    }

    #[test]
    fn defaults_and_auxiliaries() {
        let doc = parse_game(
            r#"{"agents": ["x", "y"], "goals": ["p", "q"], "resources": ["r", "s"],
                "agent_goals": {"y": ["q", "p"]},
                "requirement": {"q": {"s": "inf"}},
                "coalitions": {"both": ["y", "x"]},
                "bounds": {"b": {"s": 4}},
                "goal_sets": {"G0": ["q"]}}"#,
        )
        .unwrap();
        let g = &doc.game;
        assert!(g.agent_goals(0).is_empty());
        assert_eq!(g.agent_goals(1), &GoalSet::from([0, 1]));
        assert_eq!(g.endowment(1, 1), 0);
        assert_eq!(g.requirement(1, 1), Quantity::Infinite);
        assert_eq!(doc.coalitions["both"], Coalition::from([0, 1]));
        assert_eq!(doc.bounds["b"].as_slice(), &[Quantity::Infinite, Quantity::Finite(4)]);
        assert_eq!(doc.goal_sets["G0"], GoalSet::from([1]));
    }

    fn parse_err(text: &str) -> String {
        parse_game(text).unwrap_err().to_string()
    }

    #[test]
    fn rejects_bad_documents() {
        let with = |field: &str| GAME_A.replace(r#""endowment": {"a1": {"r1": 1}}"#, field);
        assert!(parse_err(&with(r#""endowment": {"a1": {"r1": "inf"}}"#)).contains("infinite endowment"));
        assert!(parse_err(&with(r#""endowment": {"a1": {"r1": -2}}"#)).contains("negative value"));
        assert!(parse_err(&with(r#""endowment": {"a1": {"r1": 1.5}}"#)).contains("endowment.a1.r1"));
        assert!(parse_err(&with(r#""endowment": {"zz": {"r1": 1}}"#)).contains("unknown agent `zz`"));
        assert!(parse_err(&with(r#""endowment": {"a1": {"r9": 1}}"#)).contains("unknown resource"));
        let bad_goal = GAME_A.replace(r#""a1": ["g1"]"#, r#""a1": ["g7"]"#);
        assert!(parse_err(&bad_goal).contains("agent_goals.a1[0]"));
        assert!(parse_err("{\"agents\": [").contains("line"));
        assert!(parse_err(r#"{"agents": ["a"], "goals": ["g"]}"#).contains("resources"));
        let dup = GAME_A.replace(r#""agents": ["a1"]"#, r#""agents": ["a1", "a1"]"#);
        assert!(parse_err(&dup).contains("duplicate"));
        let extra = GAME_A.replacen('{', r#"{"colitions": {},"#, 1);
        assert!(parse_err(&extra).contains("unknown field"));
    }

    #[test]
    fn serialization_is_canonical() {
        let doc = parse_game(GAME_A).unwrap();
        let text = serialize_game(&doc);
        assert_eq!(parse_game(&text).unwrap(), doc);
        assert_eq!(serialize_game(&parse_game(&text).unwrap()), text);
        let keys: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn graph_examples() {
        let k3 = parse_graph("3 3\n1 2\n2 3\n1 3").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (1, 2), (0, 2)]);
        let p3 = parse_graph("3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(p3.edges().len(), 2);
        assert_eq!(parse_graph(&format_graph(&p3)).unwrap(), p3);
        assert!(parse_graph("2 1\n1 1").unwrap_err().to_string().contains("self-loop"));
        assert!(parse_graph("2 2\n1 2\n2 1").unwrap_err().to_string().contains("duplicate"));
        assert!(parse_graph("2 1\n1 3").unwrap_err().to_string().contains("out of range"));
        assert!(parse_graph("2 1\n1 x").unwrap_err().to_string().contains("line 2"));
        assert!(parse_graph("2 1").is_err());
        assert!(parse_graph("2 1\n1 2\n1 2 3").is_err());
        assert!(parse_graph("# comment\n\n2 1\n1 2\n").is_ok());
    }
}
