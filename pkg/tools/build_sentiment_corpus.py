"""Pre-score the sentiment test corpus with the reference oracle.

Writes ``tests/data/sentiment_oracle_corpus.tsv`` (compound<TAB>sentence).
Run from the repository root after any lexicon change. The corpus mixes
plain valence sentences with the documented heuristics (negation,
boosters, ALL-CAPS emphasis, trailing exclamations) and a handful of
sentences exercising reference-only heuristics ("but" reweighting,
"kind of" dampening) that the production scorer is allowed to miss
within the mean-absolute-error budget.
"""

from pathlib import Path

from vader_reference import ReferenceAnalyzer

SENTENCES = [
    "VADER is smart, handsome, and funny.",
    "The food was good.",
    "The food was really good.",
    "The food was not good.",
    "The pasta there is amazing!",
    "The pasta there is amazing!!!",
    "Service was AMAZING and the staff so friendly.",
    "I love their terrace, such a cozy place.",
    "Honestly the worst dinner I ever had.",
    "The waiter was rude and the table was dirty.",
    "Not a bad spot for a quick lunch.",
    "I don't like their menu at all.",
    "The dessert was absolutely delicious.",
    "We had a great time and the view is gorgeous!",
    "Their vegan options are surprisingly tasty.",
    "The place felt crowded and noisy.",
    "Pretty decent burgers, nice atmosphere.",
    "The soup was cold and the bread was stale.",
    "Best pizza in town, hands down!",
    "I was disappointed by the tiny portions.",
    "The interior design is elegant and modern.",
    "Never going back, the experience was horrible.",
    "Everything was fresh and the prices are reasonable.",
    "The menu is boring and overpriced.",
    "Such a lovely evening, thank you all!",
    "The steak was overcooked and tasteless.",
    "Their coffee is fine, nothing special.",
    "This place is a hidden gem, truly wonderful.",
    "The music was too loud for a conversation.",
    "Fantastic cocktails and a very friendly bartender.",
    "The bathroom was filthy, disgusting experience.",
    "I can't recommend this place enough, superb kitchen!",
    "The booking process was easy and the staff helpful.",
    "Mediocre food and slow service.",
    "What a charming little bistro!",
    "The fish smelled weird and tasted worse.",
    "Great value for the money, huge portions.",
    "The parking situation is a nightmare there.",
    "Lovely garden seating, very relaxing vibe.",
    "The cake looked nice and tasted awful.",
    "Portions are generous and the salad is fresh.",
    "I hate waiting an hour for a cold plate.",
    "Super cute place with excellent espresso!",
    "It was an unpleasant and stressful visit.",
    "The chef clearly cares, every dish was a delight.",
    "The food was good but the service was terrible.",
    "Nice interior but the menu is limited.",
    "The pizza was kind of bland to be honest.",
    "It is not the worst option around.",
    "They were very welcoming and the wine list is impressive.",
]


def main():
    root = Path(__file__).resolve().parents[1]
    lexicon = root / "src" / "fuzzygdm" / "data" / "sentiment_lexicon.tsv"
    out_path = root / "tests" / "data" / "sentiment_oracle_corpus.tsv"
    out_path.parent.mkdir(parents=True, exist_ok=True)

    analyzer = ReferenceAnalyzer(lexicon)
    lines = ["# compound<TAB>sentence, scored by tools/vader_reference.py"]
    for sentence in SENTENCES:
        compound = analyzer.polarity_scores(sentence)["compound"]
        lines.append(f"{compound:.4f}\t{sentence}")
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(SENTENCES)} oracle-scored sentences to {out_path}")


if __name__ == "__main__":
    main()
