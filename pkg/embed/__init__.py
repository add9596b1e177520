# Embeddings F -> K, family embeddings and the colored-graph order
from embed.graph_embed import EmbedResult, FamilyVerdict, embeds, family_embeds
from embed.colored_order import LeqResult, colored_leq

__all__ = ["EmbedResult", "FamilyVerdict", "LeqResult", "colored_leq", "embeds", "family_embeds"]
