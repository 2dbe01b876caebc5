"""Regenerate fixtures/restaurant.session, the bundled golden session.

Five friends pick one of four restaurants: tri-state feature votes,
tagged chat messages (scored in sentiment-only mode), and post-decision
agreement/confidence feedback. The chat texts are tuned so the
per-alternative mean compounds land on 0.21 / 0.67 / 0.41 / 0.54 within
half a cent, matching the published worked example.
"""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]

FEATURES = [
    {"id": "feat1", "kind": "continuous", "direction": "below-mean-favorable"},
    {"id": "feat2", "kind": "continuous", "direction": "above-mean-favorable"},
    {"id": "feat3", "kind": "binary"},
    {"id": "feat4", "kind": "binary"},
    {"id": "feat5", "kind": "continuous", "direction": "above-mean-favorable"},
]

ALTERNATIVES = [
    {"id": "alter1", "label": "Garden Bistro",
     "features": {"feat1": 7500, "feat2": 1, "feat3": 1, "feat4": 0, "feat5": 3}},
    {"id": "alter2", "label": "Terrace House",
     "features": {"feat1": 9000, "feat2": 2, "feat3": 1, "feat4": 1, "feat5": 5}},
    {"id": "alter3", "label": "Corner Soup Bar",
     "features": {"feat1": 4000, "feat2": 2, "feat3": 0, "feat4": 0, "feat5": 2}},
    {"id": "alter4", "label": "Park Grill",
     "features": {"feat1": 8000, "feat2": 3, "feat3": 0, "feat4": 0, "feat5": 4}},
]

PARTICIPANTS = [f"partp{i}" for i in range(1, 6)]

ASSESSMENTS = {
    "partp1": [0, 0, 1, 1, 1],
    "partp2": [0, 1, 1, 0, 0],
    "partp3": [1, 1, 1, 0, 1],
    "partp4": [1, 0, -1, 1, 0],
    "partp5": [0, 1, 0, -1, 1],
}

MESSAGES = [
    ("partp1", "alter1", "The garden seating is nice."),
    ("partp2", "alter1", "I have been there twice with my parents."),
    ("partp3", "alter1", "It is next to my office, we could walk."),
    ("partp4", "alter1", "The vegan curry is tasty and the bread is good."),
    ("partp5", "alter1", "The room was slightly cold last time."),
    ("partp1", "alter2", "I love that place and the staff is friendly."),
    ("partp2", "alter2", "Amazing kitchen, the best pasta in town, wonderful wine list, superb desserts!"),
    ("partp3", "alter2", "They open at noon on weekdays."),
    ("partp4", "alter2", "Great food and a nice kids corner!"),
    ("partp5", "alter2", "Wonderful desserts and a friendly bartender."),
    ("partp1", "alter3", "The soup was fine even if the room was cold."),
    ("partp2", "alter3", "The drinks are cheap and the value is there."),
    ("partp3", "alter3", "The bread is fresh and the rest is average."),
    ("partp4", "alter3", "Lovely spot with tasty cooking."),
    ("partp5", "alter3", "The staff is nice, the prices cheap, the food average."),
    ("partp1", "alter4", "The music was a bit noisy for me."),
    ("partp2", "alter4", "Great grill menu and cheap beer."),
    ("partp3", "alter4", "The brunch is delicious and the value is there."),
    ("partp4", "alter4", "Best steaks, amazing cocktails, superb service, nice prices."),
    ("partp5", "alter4", "Cozy place with a pretty view of the park."),
]

FEEDBACK = [
    ("partp1", 9, 9),
    ("partp2", 10, 10),
    ("partp3", 7, 8),
    ("partp4", 9, 9),
    ("partp5", 7, 9),
]


def main():
    base = "2025-11-14T18:0{}:00+00:00"
    doc = {
        "schema_version": 1,
        "id": "restaurant-demo",
        "phase": "closed",
        "created_at": "2025-11-14T17:30:00+00:00",
        "affect": {"alpha": 1.0, "beta": 0.0},
        "consensus_thresholds": {"high_max": 2.0, "medium_max": 4.0},
        "features": FEATURES,
        "alternatives": ALTERNATIVES,
        "participants": [{"id": p, "name": f"Participant {p[-1]}"}
                         for p in PARTICIPANTS],
        "assessments": [
            {"participant": p,
             "values": {f"feat{k+1}": v for k, v in enumerate(values)}}
            for p, values in ASSESSMENTS.items()
        ],
        "messages": [
            {"participant": p, "alternative": alt, "text": text,
             "timestamp": base.format(i % 10)}
            for i, (p, alt, text) in enumerate(MESSAGES)
        ],
        "feedback": [
            {"participant": p, "agreement": al, "confidence": cl}
            for p, al, cl in FEEDBACK
        ],
    }
    out = ROOT / "fixtures" / "restaurant.session"
    out.parent.mkdir(exist_ok=True)
    out.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n",
                   encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
