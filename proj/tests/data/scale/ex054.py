m = eval(input())
k = m == 15
print(k)
print(1 if k else 0)
print(m + 15)
print([m, k])
