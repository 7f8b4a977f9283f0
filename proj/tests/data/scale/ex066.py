s = eval(input())
k = eval(input())
n = s
s = k
k = n
print(s)
print(k)
print(s == k)
