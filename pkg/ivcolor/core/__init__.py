# Domain core: graphs, families, colorings, verification, search and bounds
