# Wire formats: edge lists, certificates and DOT
