#!/usr/bin/env python3
"""Regenerates the synthetic corpus under tests/fixtures/mdo/.

Deterministic by construction (no RNG): rerunning must reproduce the
committed files byte for byte, because builds from this corpus are
compared byte for byte in the tests.

Corpus shape:
  41 diseases, 761 genes, 61 human anatomy parts, 15 mitochondrial
  anatomy parts (inline in the manifest), 479 proteins, 30 papers with
  2174 extracted terms (14 papers x 73 terms + 16 papers x 72).
"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent / "mdo"

DISEASES = [
    "MELAS",
    "MERRF",
    "NARP",
    "LHON",
    "Leigh syndrome",
    "Kearns-Sayre syndrome",
    "Chronic PEO",
    "Pearson syndrome",
    "Alpers disease",
    "MNGIE",
    "MIDD",
    "Barth syndrome",
    "Friedreich ataxia",
    "CoQ10 deficiency",
    "Mitochondrial DNA depletion syndrome",
    "Complex I deficiency",
    "Complex II deficiency",
    "Complex III deficiency",
    "Complex IV deficiency",
    "Complex V deficiency",
    "Mitochondrial myopathy",
    "Mitochondrial encephalomyopathy",
    "Sengers syndrome",
    "MEGDEL syndrome",
    "Mohr-Tranebjaerg syndrome",
    "GRACILE syndrome",
    "Wolfram syndrome",
    "Dominant optic atrophy",
    "Sideroblastic anemia with ataxia",
    "Leukoencephalopathy with brainstem involvement",
    "Ethylmalonic encephalopathy",
    "3-methylglutaconic aciduria",
    "Carnitine deficiency",
    "CPT II deficiency",
    "Multiple acyl-CoA dehydrogenase deficiency",
    "Pyruvate dehydrogenase deficiency",
    "Pyruvate carboxylase deficiency",
    "Fumarase deficiency",
    "Aconitase deficiency",
    "Mitochondrial trifunctional protein deficiency",
    "Thiamine-responsive megaloblastic anemia",
]

MT_GENES = (
    [f"MT-ND{i}" for i in range(1, 7)]
    + ["MT-ND4L"]
    + [f"MT-CO{i}" for i in range(1, 4)]
    + ["MT-ATP6", "MT-ATP8", "MT-CYB", "MT-RNR1", "MT-RNR2"]
    + [
        "MT-TA", "MT-TC", "MT-TD", "MT-TE", "MT-TF", "MT-TG", "MT-TH",
        "MT-TI", "MT-TK", "MT-TL1", "MT-TL2", "MT-TM", "MT-TN", "MT-TP",
        "MT-TQ", "MT-TR", "MT-TS1", "MT-TS2", "MT-TT", "MT-TV", "MT-TW",
        "MT-TY",
    ]
)

HUMAN_ANATOMY = [
    "Brain", "Cerebellum", "Brainstem", "Spinal cord", "Optic nerve",
    "Retina", "Cochlea", "Heart", "Cardiac muscle", "Skeletal muscle",
    "Smooth muscle", "Diaphragm", "Liver", "Kidney", "Renal cortex",
    "Pancreas", "Islets of Langerhans", "Stomach", "Small intestine",
    "Large intestine", "Esophagus", "Salivary gland", "Thyroid gland",
    "Parathyroid gland", "Adrenal gland", "Pituitary gland",
    "Hypothalamus", "Thalamus", "Basal ganglia", "Cerebral cortex",
    "Hippocampus", "Peripheral nerve", "Motor neuron", "Sensory neuron",
    "Blood", "Bone marrow", "Erythrocyte", "Leukocyte", "Platelet",
    "Spleen", "Thymus", "Lymph node", "Lung", "Bronchus", "Trachea",
    "Larynx", "Inner ear", "Middle ear", "Eye", "Lens", "Cornea", "Iris",
    "Skin", "Epidermis", "Dermis", "Hair follicle", "Sweat gland",
    "Bone", "Cartilage", "Tendon", "Ligament",
]

MITO_ANATOMY = [
    "Cristae", "Matrix", "Inner membrane", "Outer membrane",
    "Intermembrane space", "Mitochondrial DNA", "Mitochondrial ribosome",
    "ATP synthase complex", "Electron transport chain", "Cristal junction",
    "Porin channel", "TOM complex", "TIM complex", "Cardiolipin membrane",
    "Matrix granule",
]

NAMED_PROTEINS = [
    "Cytochrome c oxidase subunit 1",
    "Cytochrome c oxidase subunit 2",
    "Cytochrome b",
    "ATP synthase subunit alpha",
    "ATP synthase subunit beta",
    "NADH-ubiquinone oxidoreductase chain 1",
    "NADH-ubiquinone oxidoreductase chain 2",
    "Cytochrome c",
    "Frataxin",
    "Mitofusin-1",
    "Mitofusin-2",
    "OPA1 (dynamin-like GTPase)",
    "Coenzyme Q10 homolog α",
    "Superoxide dismutase [Mn]",
    "Pyruvate dehydrogenase E1 component",
]

PAPER_COUNT = 30
TERM_TOTAL = 2174


def write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def name_list(header, names):
    lines = [f"# {header}", ""]
    lines.extend(names)
    return "\n".join(lines) + "\n"


def main():
    assert len(DISEASES) == 41
    assert len(MT_GENES) == 37
    assert len(HUMAN_ANATOMY) == 61
    assert len(MITO_ANATOMY) == 15
    assert len(NAMED_PROTEINS) == 15

    genes = MT_GENES + [f"NMG{i:04d}" for i in range(1, 725)]
    assert len(genes) == 761

    proteins = NAMED_PROTEINS + [f"MPROT{i:04d}" for i in range(16, 480)]
    assert len(proteins) == 479

    papers = [f"PMID-{i:04d}" for i in range(1, PAPER_COUNT + 1)]

    # 14 papers carry 73 terms, 16 carry 72.
    per_paper = [73] * 14 + [72] * 16
    assert sum(per_paper) == TERM_TOTAL

    write(OUT / "genes.txt", name_list("gene symbols, synthetic corpus", genes))
    write(OUT / "human_anatomy.txt",
          name_list("human anatomy, synthetic corpus", HUMAN_ANATOMY))
    write(OUT / "proteins.txt",
          name_list("protein names, synthetic corpus", proteins))
    write(OUT / "papers.txt", name_list("source papers", papers))

    disease_rows = ["# disease<TAB>omim<TAB>long name", ""]
    for i, name in enumerate(DISEASES):
        omim = str(510000 + i) if i % 3 != 2 else ""
        long_name = f"{name}, extended clinical form" if i % 2 == 0 else ""
        disease_rows.append(f"{name}\t{omim}\t{long_name}")
    write(OUT / "diseases.tsv", "\n".join(disease_rows) + "\n")

    term_index = 1
    term_sources = []
    for paper, count in zip(papers, per_paper):
        rows = [f"# terms extracted from {paper}", ""]
        for _ in range(count):
            rows.append(f"{paper}\tT{term_index:05d}")
            term_index += 1
        rel = f"terms/{paper}.tsv"
        write(OUT / rel, "\n".join(rows) + "\n")
        term_sources.append(rel)
    assert term_index == TERM_TOTAL + 1

    scaffold_sources = [
        {
            "locator": "diseases.tsv",
            "format": "disease-table",
            "pattern": "disease",
            "parent": "Disease",
        },
        {
            "locator": "genes.txt",
            "format": "name-list",
            "pattern": "gene",
            "parent": "Gene",
        },
        {
            "locator": "human_anatomy.txt",
            "format": "name-list",
            "pattern": "named-subclass",
            "parent": "HumanAnatomy",
        },
        {
            "locator": "inline",
            "inline": MITO_ANATOMY,
            "format": "name-list",
            "pattern": "named-subclass",
            "parent": "MitochondrialAnatomy",
        },
        {
            "locator": "proteins.txt",
            "format": "name-list",
            "pattern": "named-subclass",
            "parent": "Protein",
        },
    ]
    paper_sources = [
        {
            "locator": "papers.txt",
            "format": "name-list",
            "pattern": "paper",
            "parent": "Paper",
        }
    ] + [
        {
            "locator": rel,
            "format": "paper-terms",
            "pattern": "term",
            "parent": "Term",
        }
        for rel in term_sources
    ]

    base = {
        "ontology_iri": "http://purl.example.org/ontoforge/mdo",
        "base_prefix": "http://purl.example.org/ontoforge/mdo#",
    }
    write(OUT / "manifest.json",
          json.dumps({**base, "sources": scaffold_sources + paper_sources},
                     indent=2, ensure_ascii=False) + "\n")
    write(OUT / "manifest_scaffold.json",
          json.dumps({**base, "sources": scaffold_sources}, indent=2,
                     ensure_ascii=False) + "\n")
    print(f"wrote corpus to {OUT}")


if __name__ == "__main__":
    main()
