"""Write the coproduct, dual-basis, Gram and order tables to an output directory."""
import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from forest_operads.algebra import tensor_to_text, to_text
from forest_operads.coalgebra import delta, p_ladder_antipode
from forest_operads.combinat import enumerate_forests, render_forest
from forest_operads.pairing import dual_table, dual_table_text, gram, q_sequence
from forest_operads.tamari import poset


@dataclass
class TableConfig:
    out: Path = Path("tables")
    coproduct_weight: int = 4
    dual_weight: int = 4
    gram_weight: int = 5
    order_weight: int = 5
    sequence_length: int = 5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    cfg = TableConfig()
    for name, value in asdict(cfg).items():
        ap.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    cfg = TableConfig(**vars(ap.parse_args()))
    cfg.out.mkdir(parents=True, exist_ok=True)

    blocks = []
    for n in range(1, cfg.coproduct_weight + 1):
        for F in enumerate_forests(n):
            blocks.append(f"Δ({render_forest(F)}) =\n{tensor_to_text(delta(F))}")
    (cfg.out / "coproducts.txt").write_text("\n\n".join(blocks) + "\n", encoding="utf-8")

    (cfg.out / "dual_basis.txt").write_text(dual_table_text(dual_table(cfg.dual_weight)) + "\n", encoding="utf-8")

    seq = [f"q{n} = {to_text(q_sequence(n))}" for n in range(1, cfg.sequence_length + 1)]
    seq += [f"p{n} = {to_text(p_ladder_antipode(n))}" for n in range(1, cfg.sequence_length + 1)]
    (cfg.out / "sequences.txt").write_text("\n".join(seq) + "\n", encoding="utf-8")

    dets = {}
    for n in range(1, cfg.gram_weight + 1):
        g = gram(n)
        (cfg.out / f"gram_{n}.csv").write_text(g.to_csv(), encoding="utf-8")
        dets[n] = g.det

    stats = {}
    for n in range(1, cfg.order_weight + 1):
        P = poset(n)
        (cfg.out / f"order_{n}.dot").write_text(P.to_dot(), encoding="utf-8")
        (cfg.out / f"mobius_{n}.csv").write_text(P.mobius_csv(), encoding="utf-8")
        stats[n] = P.statistics()
    summary = {"gram_determinants": dets, "order_statistics": stats}
    (cfg.out / "summary.json").write_text(json.dumps(summary, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote tables to {cfg.out}")


if __name__ == "__main__":
    main()
