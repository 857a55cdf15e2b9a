# dcj-escape - DCJ random walks and their escape from parsimony
