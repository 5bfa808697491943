//! Audit reports: per-property verdicts with re-verifiable counterexample
//! witnesses, renderable as aligned text or as a stable JSON document.
//!
//! The JSON layout is part of the tool's interface: a report object carries
//! `ring`, `ideal`, `strategy`, `notes`, and `properties`, and each property
//! entry carries `group`, `item`, `verdict`, `instances_tested`, `witness_a`,
//! `witness_b`, `lhs`, `rhs`, and `note`. Serialization is deterministic:
//! identical reports render to identical bytes.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The four audited property groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum PropertyGroup {
    /// The ten approximation-space identities (canonical readings).
    SpaceProps,
    /// The twelve identities for approximations relative to a maximal ideal.
    Prop3_1,
    /// The twelve identities for a principal ideal plus coset exactness.
    Prop4_1,
    /// The four sum/product interaction laws.
    Prop4_2,
}

impl PropertyGroup {
    pub fn item_count(self) -> u32 {
        match self {
            PropertyGroup::SpaceProps => 10,
            PropertyGroup::Prop3_1 => 12,
            PropertyGroup::Prop4_1 => 13,
            PropertyGroup::Prop4_2 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PropertyGroup::SpaceProps => "SpaceProps",
            PropertyGroup::Prop3_1 => "Prop3_1",
            PropertyGroup::Prop4_1 => "Prop4_1",
            PropertyGroup::Prop4_2 => "Prop4_2",
        }
    }

    /// Lenient spelling used on the command line.
    pub fn parse_alias(text: &str) -> Option<Self> {
        match text.trim().to_ascii_lowercase().as_str() {
            "space" | "spaceprops" => Some(PropertyGroup::SpaceProps),
            "3-1" | "3_1" | "prop3-1" | "prop3_1" => Some(PropertyGroup::Prop3_1),
            "4-1" | "4_1" | "prop4-1" | "prop4_1" => Some(PropertyGroup::Prop4_1),
            "4-2" | "4_2" | "prop4-2" | "prop4_2" => Some(PropertyGroup::Prop4_2),
            _ => None,
        }
    }
}

impl fmt::Display for PropertyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One audited claim: a group and an item number within the group's range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PropertyId {
    pub group: PropertyGroup,
    pub item: u32,
}

impl PropertyId {
    pub fn new(group: PropertyGroup, item: u32) -> Self {
        assert!(
            item >= 1 && item <= group.item_count(),
            "{group} has items 1..={}, got {item}",
            group.item_count()
        );
        PropertyId { group, item }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.group, self.item)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds-on-all-tested")]
    Holds,
    #[serde(rename = "counterexample")]
    Counterexample,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `pad` rather than `write_str` so width specifiers apply.
        f.pad(match self {
            Verdict::Holds => "holds-on-all-tested",
            Verdict::Counterexample => "counterexample",
        })
    }
}

/// One verdict line. Witness fields are present exactly when the verdict is
/// a counterexample (`witness_b` additionally requires a two-set instance);
/// `lhs` and `rhs` are the two evaluated sides of the claim stated in `note`
/// (or of the item's standard form when `note` is absent).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyEntry {
    pub group: PropertyGroup,
    pub item: u32,
    pub verdict: Verdict,
    pub instances_tested: u64,
    pub witness_a: Option<Vec<usize>>,
    pub witness_b: Option<Vec<usize>>,
    pub lhs: Option<Vec<usize>>,
    pub rhs: Option<Vec<usize>>,
    pub note: Option<String>,
}

impl PropertyEntry {
    pub fn id(&self) -> PropertyId {
        PropertyId::new(self.group, self.item)
    }
}

/// Echo of the strategy an audit actually ran with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyEcho {
    pub mode: String,
    pub max_universe_for_exhaustive: usize,
    pub sample_count: u64,
    pub seed: u64,
    /// Identifier of the deterministic sample generator.
    pub generator: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    /// Descriptor of the audited ring (or of the bare approximation space).
    pub ring: String,
    /// Descriptor of the ideal, when the audit is relative to one.
    pub ideal: Option<String>,
    pub strategy: StrategyEcho,
    pub notes: Vec<String>,
    pub properties: Vec<PropertyEntry>,
}

impl AuditReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("audit reports always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn has_counterexamples(&self) -> bool {
        self.properties.iter().any(|e| e.verdict == Verdict::Counterexample)
    }

    pub fn counterexample_count(&self) -> usize {
        self.properties.iter().filter(|e| e.verdict == Verdict::Counterexample).count()
    }

    /// All entries for one item (an item can have several entries when its
    /// claim is decomposed into separate inclusions).
    pub fn entries(&self, group: PropertyGroup, item: u32) -> Vec<&PropertyEntry> {
        self.properties
            .iter()
            .filter(|e| e.group == group && e.item == item)
            .collect()
    }

    pub fn entry(&self, group: PropertyGroup, item: u32) -> Option<&PropertyEntry> {
        self.properties.iter().find(|e| e.group == group && e.item == item)
    }

    /// Folds several per-group reports over the same subject and strategy
    /// into one document.
    pub fn combine(ring: String, ideal: Option<String>, parts: Vec<AuditReport>) -> AuditReport {
        let strategy = parts
            .first()
            .expect("combine needs at least one report")
            .strategy
            .clone();
        let mut notes = Vec::new();
        let mut properties = Vec::new();
        for part in parts {
            debug_assert_eq!(part.strategy, strategy);
            notes.extend(part.notes);
            properties.extend(part.properties);
        }
        AuditReport { ring, ideal, strategy, notes, properties }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ring: {}\n", self.ring));
        if let Some(ideal) = &self.ideal {
            out.push_str(&format!("ideal: {ideal}\n"));
        }
        let s = &self.strategy;
        out.push_str(&format!(
            "strategy: mode={} max_universe_for_exhaustive={} sample_count={} seed={} generator={}\n",
            s.mode, s.max_universe_for_exhaustive, s.sample_count, s.seed, s.generator
        ));
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        for e in &self.properties {
            let mut line = format!(
                "[{} {:>2}] {:<20} instances={}",
                e.group, e.item, e.verdict, e.instances_tested
            );
            if e.verdict == Verdict::Counterexample {
                line.push_str(&format!(
                    "  A={} B={} lhs={} rhs={}",
                    fmt_opt_set(&e.witness_a),
                    fmt_opt_set(&e.witness_b),
                    fmt_opt_set(&e.lhs),
                    fmt_opt_set(&e.rhs)
                ));
            }
            if let Some(note) = &e.note {
                line.push_str(&format!("  ({note})"));
            }
            line.push('\n');
            out.push_str(&line);
        }
        out.push_str(&format!(
            "summary: {} entries, {} counterexamples\n",
            self.properties.len(),
            self.counterexample_count()
        ));
        out
    }
}

fn fmt_opt_set(v: &Option<Vec<usize>>) -> String {
    match v {
        None => "-".to_string(),
        Some(members) => {
            let inner: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}
